#include "antipode/linalg.hpp"

#include <stdexcept>

namespace antipode {

namespace {

// Scale every row by the lcm of its denominators; track the denominator
// product so determinants can be rescaled afterwards.
IntMat clear_denominators(const RatMat& a, Rat& scale) {
    IntMat m(a.rows(), a.cols());
    scale = 1;
    for (int r = 0; r < a.rows(); ++r) {
        Int l = 1;
        for (int c = 0; c < a.cols(); ++c) lcm(l.get_mpz_t(), l.get_mpz_t(), a.at(r, c).get_den().get_mpz_t());
        for (int c = 0; c < a.cols(); ++c) {
            Rat v = a.at(r, c) * Rat(l);
            m.at(r, c) = v.get_num();
        }
        scale *= Rat(l);
    }
    return m;
}

Int det_bareiss_int(IntMat m) {
    const int n = m.rows();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m.at(k, k) == 0) {
            int sw = -1;
            for (int r = k + 1; r < n; ++r)
                if (m.at(r, k) != 0) { sw = r; break; }
            if (sw < 0) return 0;
            m.swap_rows(k, sw);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

}  // namespace

Rat det_bareiss(const RatMat& a) {
    if (!a.is_square()) throw std::invalid_argument("determinant of non-square matrix");
    Rat scale;
    IntMat m = clear_denominators(a, scale);
    return Rat(det_bareiss_int(std::move(m))) / scale;
}

RatMat inverse(const RatMat& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    const int n = a.rows();
    RatMat w(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) w.at(r, c) = a.at(r, c);
        w.at(r, n + r) = 1;
    }
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (w.at(r, c) != 0) { piv = r; break; }
        if (piv < 0) throw std::invalid_argument("singular matrix");
        if (piv != c)
            for (int k = 0; k < 2 * n; ++k) std::swap(w.at(c, k), w.at(piv, k));
        Rat pv = w.at(c, c);
        for (int k = 0; k < 2 * n; ++k) w.at(c, k) /= pv;
        for (int r = 0; r < n; ++r) {
            if (r == c || w.at(r, c) == 0) continue;
            Rat f = w.at(r, c);
            for (int k = 0; k < 2 * n; ++k) w.at(r, k) -= f * w.at(c, k);
        }
    }
    RatMat inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = w.at(r, n + c);
    return inv;
}

std::optional<std::vector<Rat>> solve_left(const RatMat& a, std::span<const Rat> v) {
    if (static_cast<int>(v.size()) != a.cols()) throw std::invalid_argument("solve_left: rhs length mismatch");
    // Transposed system: a^T y = v^T with y the unknowns.
    const int rows = a.cols(), cols = a.rows();
    RatMat w(rows, cols + 1);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) w.at(r, c) = a.at(c, r);
        w.at(r, cols) = v[r];
    }
    std::vector<int> pivot_col;
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; ++c) {
        int piv = -1;
        for (int r = pr; r < rows; ++r)
            if (w.at(r, c) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != pr)
            for (int k = 0; k <= cols; ++k) std::swap(w.at(pr, k), w.at(piv, k));
        Rat pv = w.at(pr, c);
        for (int k = 0; k <= cols; ++k) w.at(pr, k) /= pv;
        for (int r = 0; r < rows; ++r) {
            if (r == pr || w.at(r, c) == 0) continue;
            Rat f = w.at(r, c);
            for (int k = 0; k <= cols; ++k) w.at(r, k) -= f * w.at(pr, k);
        }
        pivot_col.push_back(c);
        ++pr;
    }
    for (int r = pr; r < rows; ++r)
        if (w.at(r, cols) != 0) return std::nullopt;
    std::vector<Rat> x(cols, Rat(0));
    for (int i = 0; i < pr; ++i) x[pivot_col[i]] = w.at(i, cols);
    return x;
}

int rank_of(const RatMat& a) {
    RatMat w = a;
    const int rows = w.rows(), cols = w.cols();
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; ++c) {
        int piv = -1;
        for (int r = pr; r < rows; ++r)
            if (w.at(r, c) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != pr)
            for (int k = 0; k < cols; ++k) std::swap(w.at(pr, k), w.at(piv, k));
        for (int r = pr + 1; r < rows; ++r) {
            if (w.at(r, c) == 0) continue;
            Rat f = w.at(r, c) / w.at(pr, c);
            for (int k = c; k < cols; ++k) w.at(r, k) -= f * w.at(pr, k);
        }
        ++pr;
    }
    return pr;
}

HnfResult hnf(const IntMat& a) {
    const int m = a.rows(), n = a.cols();
    HnfResult res{a, IntMat::identity(m), 0};
    IntMat& h = res.hermite;
    IntMat& u = res.transform;
    int pr = 0;
    for (int c = 0; c < n && pr < m; ++c) {
        int piv = -1;
        for (int r = pr; r < m; ++r)
            if (h.at(r, c) != 0) { piv = r; break; }
        if (piv < 0) continue;
        h.swap_rows(pr, piv);
        u.swap_rows(pr, piv);
        // Euclidean passes until the column below the pivot is clear.
        bool again = true;
        while (again) {
            again = false;
            for (int r = pr + 1; r < m; ++r) {
                if (h.at(r, c) == 0) continue;
                if (cmp(abs(h.at(r, c)), abs(h.at(pr, c))) < 0) {
                    h.swap_rows(pr, r);
                    u.swap_rows(pr, r);
                }
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(r, c).get_mpz_t(), h.at(pr, c).get_mpz_t());
                h.submul_row(r, pr, q);
                u.submul_row(r, pr, q);
                if (h.at(r, c) != 0) again = true;
            }
        }
        if (h.at(pr, c) < 0) {
            h.negate_row(pr);
            u.negate_row(pr);
        }
        for (int r = 0; r < pr; ++r) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(r, c).get_mpz_t(), h.at(pr, c).get_mpz_t());
            h.submul_row(r, pr, q);
            u.submul_row(r, pr, q);
        }
        ++pr;
    }
    res.rank = pr;
    return res;
}

IntMat left_kernel(const IntMat& a) {
    HnfResult r = hnf(a);
    const int m = a.rows();
    IntMat ker(m - r.rank, m);
    for (int i = r.rank; i < m; ++i)
        for (int j = 0; j < m; ++j) ker.at(i - r.rank, j) = r.transform.at(i, j);
    return ker;
}

IntMat right_kernel(const IntMat& a) {
    return left_kernel(a.transpose());
}

LdlResult ldl(const RatMat& gram) {
    if (!gram.is_symmetric()) throw std::invalid_argument("ldl: matrix not symmetric");
    const int n = gram.rows();
    LdlResult res{RatMat::identity(n), std::vector<Rat>(n)};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            Rat s = gram.at(i, j);
            for (int k = 0; k < j; ++k) s -= res.l.at(i, k) * res.l.at(j, k) * res.d[k];
            res.l.at(i, j) = s / res.d[j];
        }
        Rat s = gram.at(i, i);
        for (int k = 0; k < i; ++k) s -= res.l.at(i, k) * res.l.at(i, k) * res.d[k];
        if (s <= 0) throw std::invalid_argument("matrix not positive definite");
        res.d[i] = s;
    }
    return res;
}

namespace {

struct GsoState {
    RatMat mu;           // strictly lower triangular
    std::vector<Rat> b;  // squared Gram-Schmidt norms
};

GsoState gso_from_gram(const RatMat& g) {
    const int n = g.rows();
    GsoState s{RatMat(n, n), std::vector<Rat>(n)};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            Rat v = g.at(i, j);
            for (int k = 0; k < j; ++k) v -= s.mu.at(j, k) * s.mu.at(i, k) * s.b[k];
            s.mu.at(i, j) = v / s.b[j];
        }
        Rat v = g.at(i, i);
        for (int k = 0; k < i; ++k) v -= s.mu.at(i, k) * s.mu.at(i, k) * s.b[k];
        if (v <= 0) throw std::invalid_argument("lll_reduce: gram not positive definite");
        s.b[i] = v;
    }
    return s;
}

}  // namespace

LllResult lll_reduce(const RatMat& gram, const Rat& delta) {
    if (!gram.is_symmetric()) throw std::invalid_argument("lll_reduce: gram not symmetric");
    if (delta <= make_rat(1, 4) || delta >= 1) throw std::invalid_argument("lll_reduce: delta outside (1/4, 1)");
    const int n = gram.rows();
    LllResult res{gram, IntMat::identity(n)};
    if (n == 0) return res;
    RatMat& g = res.gram;
    IntMat& t = res.transform;

    GsoState s = gso_from_gram(g);  // also rejects non-PD input

    auto rowop = [&](int i, int j, const Int& q) {
        // b_i <- b_i - q b_j
        t.submul_row(i, j, q);
        Rat qr{q};
        for (int k = 0; k < n; ++k) g.at(i, k) -= qr * g.at(j, k);
        for (int k = 0; k < n; ++k) g.at(k, i) -= qr * g.at(k, j);
    };
    auto swap_basis = [&](int i, int j) {
        t.swap_rows(i, j);
        for (int k = 0; k < n; ++k) std::swap(g.at(i, k), g.at(j, k));
        for (int k = 0; k < n; ++k) std::swap(g.at(k, i), g.at(k, j));
    };

    int k = 1;
    while (k < n) {
        bool reduced_any = false;
        for (int j = k - 1; j >= 0; --j) {
            Int q = round_nearest(s.mu.at(k, j));
            if (q != 0) {
                rowop(k, j, q);
                reduced_any = true;
            }
        }
        if (reduced_any) s = gso_from_gram(g);
        if (s.b[k] >= (delta - s.mu.at(k, k - 1) * s.mu.at(k, k - 1)) * s.b[k - 1]) {
            ++k;
        } else {
            swap_basis(k, k - 1);
            s = gso_from_gram(g);
            k = std::max(k - 1, 1);
        }
    }
    return res;
}

}  // namespace antipode

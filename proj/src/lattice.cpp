#include "antipode/lattice.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace antipode {

namespace {

Int content_of(const IntMat& m) {
    Int g = 0;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) g = gcd(g, m.at(r, c));
    return g;
}

}  // namespace

ScaledLattice make_lattice(IntMat basis, Int norm_divisor) {
    if (norm_divisor < 1) throw std::invalid_argument("lattice: norm divisor must be positive");
    // minimality of d: strip primes p with p | every entry and p^2 | d
    Int g = content_of(basis);
    if (g > 1) {
        for (Int p = 2; p * p <= norm_divisor || p <= g;) {
            if (g % p == 0 && norm_divisor % (p * p) == 0) {
                for (int r = 0; r < basis.rows(); ++r)
                    for (int c = 0; c < basis.cols(); ++c) mpz_divexact(basis.at(r, c).get_mpz_t(), basis.at(r, c).get_mpz_t(), p.get_mpz_t());
                norm_divisor /= p * p;
                g /= p;
            } else {
                p += 1;
            }
            if (g == 1) break;
        }
    }
    return ScaledLattice{std::move(basis), std::move(norm_divisor)};
}

RatMat gram_of(const ScaledLattice& l) {
    const int k = l.basis.rows(), n = l.basis.cols();
    RatMat g(k, k);
    Int acc;
    for (int i = 0; i < k; ++i)
        for (int j = i; j < k; ++j) {
            acc = 0;
            for (int c = 0; c < n; ++c) acc += l.basis.at(i, c) * l.basis.at(j, c);
            Rat v = make_rat(acc, l.norm_divisor);
            g.at(i, j) = v;
            g.at(j, i) = v;
        }
    return g;
}

std::optional<std::vector<Int>> member_coords(const ScaledLattice& l, std::span<const Int> v) {
    if (static_cast<int>(v.size()) != l.ambient_dim()) throw std::invalid_argument("member test: dimension mismatch");
    std::vector<Rat> rv(v.size());
    for (size_t i = 0; i < v.size(); ++i) rv[i] = Rat(v[i]);
    auto x = solve_left(l.basis.to_rat(), rv);
    if (!x) return std::nullopt;
    std::vector<Int> coords(x->size());
    for (size_t i = 0; i < x->size(); ++i) {
        if ((*x)[i].get_den() != 1) return std::nullopt;
        coords[i] = (*x)[i].get_num();
    }
    return coords;
}

bool is_member(const ScaledLattice& l, std::span<const Int> v) {
    return member_coords(l, v).has_value();
}

GramLattice dual_basis(const ScaledLattice& l) {
    return GramLattice{inverse(gram_of(l))};
}

SaturationResult saturate_with_index(const ScaledLattice& ambient, const IntMat& rows) {
    const int m = rows.rows();
    IntMat coords(m, ambient.rank());
    for (int r = 0; r < m; ++r) {
        auto x = member_coords(ambient, rows.row(r));
        if (!x) throw std::invalid_argument("saturate: row is not a member of the ambient lattice");
        for (int c = 0; c < ambient.rank(); ++c) coords.at(r, c) = (*x)[c];
    }
    if (rank_of(coords.to_rat()) != m) throw std::invalid_argument("saturate: rows not independent");

    // saturation = annihilator of the integer kernel of the row span
    IntMat w = right_kernel(coords);
    IntMat sat = right_kernel(w);
    HnfResult canon = hnf(sat);
    IntMat sat_basis(m, ambient.rank());
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < ambient.rank(); ++c) sat_basis.at(r, c) = canon.hermite.at(r, c);

    // index of the row lattice inside its saturation
    RatMat t(m, m);
    for (int r = 0; r < m; ++r) {
        std::vector<Rat> rhs(ambient.rank());
        for (int c = 0; c < ambient.rank(); ++c) rhs[c] = Rat(coords.at(r, c));
        auto x = solve_left(sat_basis.to_rat(), rhs);
        if (!x) throw std::logic_error("saturate: row escaped its own saturation");
        for (int c = 0; c < m; ++c) t.at(r, c) = (*x)[c];
    }
    Rat idx = det_bareiss(t);
    if (idx.get_den() != 1) throw std::logic_error("saturate: non-integer index");

    return SaturationResult{make_lattice(sat_basis * ambient.basis, ambient.norm_divisor), abs(idx.get_num())};
}

ScaledLattice saturate(const ScaledLattice& ambient, const IntMat& rows) {
    return saturate_with_index(ambient, rows).lattice;
}

GramLattice project(const ScaledLattice& ambient, const Subspace& u) {
    const int n = ambient.ambient_dim(), k = u.dim();
    if (u.ambient_dim() != n) throw std::invalid_argument("project: subspace lives in a different coordinate space");
    if (k == 0 || rank_of(u.span_rows) != k) throw std::invalid_argument("project: degenerate subspace");

    const RatMat& ur = u.span_rows;
    RatMat uut = ur * ur.transpose();
    RatMat uut_inv = inverse(uut);
    // coords of projected generators over the u rows
    RatMat coords = ambient.basis.to_rat() * ur.transpose() * uut_inv;

    // clear denominators, HNF-reduce to a basis of the projected lattice
    Int den = 1;
    for (int r = 0; r < coords.rows(); ++r)
        for (int c = 0; c < k; ++c) lcm(den.get_mpz_t(), den.get_mpz_t(), coords.at(r, c).get_den().get_mpz_t());
    IntMat ci(coords.rows(), k);
    for (int r = 0; r < coords.rows(); ++r)
        for (int c = 0; c < k; ++c) {
            Rat v = coords.at(r, c) * Rat(den);
            ci.at(r, c) = v.get_num();
        }
    HnfResult h = hnf(ci);
    if (h.rank != k) throw std::invalid_argument("project: projected lattice does not span the subspace");
    RatMat basis(k, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) basis.at(r, c) = make_rat(h.hermite.at(r, c), den);

    // metric of the u rows in the ambient scale
    RatMat metric = uut.scaled(make_rat(Int(1), ambient.norm_divisor));
    return GramLattice{basis * metric * basis.transpose()};
}

Subspace orthogonal_complement(int ambient_dim, const Subspace& u) {
    if (u.ambient_dim() != ambient_dim) throw std::invalid_argument("orthogonal_complement: dimension mismatch");
    // integerize rows, then take the integer right kernel for a clean basis
    IntMat rows(u.dim(), ambient_dim);
    for (int r = 0; r < u.dim(); ++r) {
        Int den = 1;
        for (int c = 0; c < ambient_dim; ++c) lcm(den.get_mpz_t(), den.get_mpz_t(), u.span_rows.at(r, c).get_den().get_mpz_t());
        for (int c = 0; c < ambient_dim; ++c) {
            Rat v = u.span_rows.at(r, c) * Rat(den);
            rows.at(r, c) = v.get_num();
        }
    }
    IntMat ker = right_kernel(rows);
    return Subspace{ker.to_rat()};
}

// ------------------------------------------------------------------ text I/O

namespace {

std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    return tokens;
}

}  // namespace

ScaledLattice read_lattice(std::istream& in) {
    auto toks = tokenize(in);
    size_t i = 0;
    auto next = [&]() -> const std::string& {
        if (i >= toks.size()) throw ParseError("lattice file: unexpected end of input");
        return toks[i++];
    };
    if (next() != "lattice") throw ParseError("lattice file: expected 'lattice' header");
    long n, k;
    Int d;
    try {
        n = std::stol(next());
        k = std::stol(next());
        d = Int(next());
    } catch (const std::exception&) {
        throw ParseError("lattice file: malformed header");
    }
    if (n < 1 || k < 1 || k > n || d < 1) throw ParseError("lattice file: invalid header values");
    IntMat basis(static_cast<int>(k), static_cast<int>(n));
    for (long r = 0; r < k; ++r)
        for (long c = 0; c < n; ++c) {
            const std::string& t = next();
            auto q = parse_rat(t);
            if (!q || q->get_den() != 1) throw ParseError("lattice file: non-integer basis entry '" + t + "'");
            basis.at(static_cast<int>(r), static_cast<int>(c)) = q->get_num();
        }
    if (i != toks.size()) throw ParseError("lattice file: trailing tokens");
    if (rank_of(basis.to_rat()) != k) throw ParseError("lattice file: basis rows not independent");
    return make_lattice(std::move(basis), std::move(d));
}

void write_lattice(std::ostream& out, const ScaledLattice& l) {
    out << "lattice " << l.ambient_dim() << " " << l.rank() << " " << l.norm_divisor.get_str() << "\n";
    for (int r = 0; r < l.rank(); ++r) {
        for (int c = 0; c < l.ambient_dim(); ++c) {
            if (c) out << " ";
            out << l.basis.at(r, c).get_str();
        }
        out << "\n";
    }
}

RatMat read_gram(std::istream& in) {
    auto toks = tokenize(in);
    size_t i = 0;
    auto next = [&]() -> const std::string& {
        if (i >= toks.size()) throw ParseError("gram file: unexpected end of input");
        return toks[i++];
    };
    if (next() != "gram") throw ParseError("gram file: expected 'gram' header");
    long k;
    try {
        k = std::stol(next());
    } catch (const std::exception&) {
        throw ParseError("gram file: malformed header");
    }
    if (k < 1) throw ParseError("gram file: invalid dimension");
    RatMat g(static_cast<int>(k), static_cast<int>(k));
    for (long r = 0; r < k; ++r)
        for (long c = 0; c < k; ++c) {
            const std::string& t = next();
            auto q = parse_rat(t);
            if (!q) throw ParseError("gram file: bad entry '" + t + "'");
            g.at(static_cast<int>(r), static_cast<int>(c)) = *q;
        }
    if (i != toks.size()) throw ParseError("gram file: trailing tokens");
    if (!g.is_symmetric()) throw ParseError("gram file: matrix not symmetric");
    return g;
}

void write_gram(std::ostream& out, const RatMat& gram) {
    out << "gram " << gram.rows() << "\n";
    for (int r = 0; r < gram.rows(); ++r) {
        for (int c = 0; c < gram.cols(); ++c) {
            if (c) out << " ";
            out << rat_to_string(gram.at(r, c));
        }
        out << "\n";
    }
}

}  // namespace antipode

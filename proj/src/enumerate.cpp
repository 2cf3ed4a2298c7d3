#include "antipode/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace antipode {

namespace {

constexpr double kRelSlack = 9.4e-10;  // ~2^-30, widening applied before exact checks
constexpr double kAbsSlack = 1e-12;

Int int128_to_mpz(__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Int r = static_cast<unsigned long>(u >> 64);
    r <<= 64;
    r += static_cast<unsigned long>(u & ~0ULL);
    return neg ? Int(-r) : r;
}

// Shared exact/floating data for one enumeration problem, built from the
// LLL-reduced Gram.
struct EnumProblem {
    int n = 0;
    IntMat transform;                        // reduced = T * gram * T^T
    std::vector<std::vector<long>> tlong;    // transform as machine ints
    std::vector<std::vector<long>> gint64;   // reduced gram * den, when it fits
    std::vector<std::vector<Int>> gintz;     // always valid
    Int den;
    Rat bound;                               // inclusive, in original units
    Rat bound_scaled;                        // bound * den (exact)
    std::vector<std::vector<double>> lmu;    // unit lower triangular factors
    std::vector<double> ldiag;               // LDL diagonal
    double bound_d = 0;                      // widened double bound in scaled units
    bool use_int64 = false;

    long outer_tasks() const {
        double r = std::sqrt(std::max(0.0, bound_d / std::max(ldiag[n - 1], 1e-300))) + 1e-9;
        return static_cast<long>(std::floor(r)) + 1;
    }
};

EnumProblem prepare(const RatMat& gram, const Rat& bound) {
    EnumProblem p;
    p.n = gram.rows();
    LllResult red = lll_reduce(gram);
    p.transform = std::move(red.transform);
    const RatMat& g = red.gram;

    p.den = 1;
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j) lcm(p.den.get_mpz_t(), p.den.get_mpz_t(), g.at(i, j).get_den().get_mpz_t());
    p.gintz.assign(p.n, std::vector<Int>(p.n));
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j) {
            Rat v = g.at(i, j) * Rat(p.den);
            p.gintz[i][j] = v.get_num();
        }
    p.bound = bound;
    p.bound_scaled = bound * Rat(p.den);

    LdlResult f = ldl(g);
    p.lmu.assign(p.n, std::vector<double>(p.n, 0.0));
    p.ldiag.resize(p.n);
    for (int i = 0; i < p.n; ++i) {
        p.ldiag[i] = mpq_get_d(f.d[i].get_mpq_t());
        for (int j = 0; j < i; ++j) p.lmu[i][j] = mpq_get_d(f.l.at(i, j).get_mpq_t());
    }
    // The LDL doubles are in the same (unscaled) units as the input bound;
    // only the exact accumulators work in den-scaled integers.
    double bd = mpq_get_d(p.bound.get_mpq_t());
    p.bound_d = bd * (1 + kRelSlack) + kAbsSlack;

    p.tlong.assign(p.n, std::vector<long>(p.n));
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j) {
            if (!mpz_fits_slong_p(p.transform.at(i, j).get_mpz_t()))
                throw std::runtime_error("enumeration: reduction transform exceeds machine integers");
            p.tlong[i][j] = p.transform.at(i, j).get_si();
        }

    // int64 path when a conservative worst-case partial dot fits __int128
    double max_g = 0;
    for (auto& row : p.gintz)
        for (auto& v : row) max_g = std::max(max_g, std::fabs(mpz_get_d(v.get_mpz_t())));
    double worst = 1e80;
    try {
        RatMat ginv = inverse(g);
        double xmax = 0;
        for (int i = 0; i < p.n; ++i) {
            double gi = mpq_get_d(ginv.at(i, i).get_mpq_t());
            xmax = std::max(xmax, std::sqrt(std::max(0.0, gi * mpq_get_d(p.bound.get_mpq_t()))) + 2);
        }
        worst = p.n * p.n * max_g * xmax * xmax;
    } catch (const std::exception&) {
    }
    p.use_int64 = worst < 1e30 && max_g < 9e18;
    if (p.use_int64) {
        p.gint64.assign(p.n, std::vector<long>(p.n));
        for (int i = 0; i < p.n; ++i)
            for (int j = 0; j < p.n; ++j) p.gint64[i][j] = static_cast<long>(p.gintz[i][j].get_si());
    }
    return p;
}

// Exact comparison norm_num <= bound * den for an integer norm accumulator.
bool within_bound(const EnumProblem& p, const Int& norm_num) {
    return Rat(norm_num) <= p.bound_scaled;
}

// One DFS worker over a fixed outermost value. Emits sign classes
// (coordinates over the *reduced* basis) with exact scaled norms.
template <typename Acc>
class Walker {
public:
    Walker(const EnumProblem& p, const std::function<void(const std::vector<long>&, const Int&)>& emit)
        : p_(p), emit_(emit), n_(p.n), x_(p.n, 0),
          sigma_(p.n + 1, std::vector<double>(p.n, 0.0)),
          rho_(p.n + 1, 0.0),
          dot_(p.n + 1, std::vector<Acc>(p.n)),
          norm_(p.n + 1) {
        for (int j = 0; j < n_; ++j) dot_[n_][j] = Acc(0);
        norm_[n_] = Acc(0);
    }

    // Enumerate the subtree with the outermost coordinate fixed to v.
    void run_outer(long v) {
        descend(n_ - 1, v, true);
    }

private:
    double radius(int lvl, double rho) const {
        double rem = p_.bound_d - rho;
        if (rem < 0) return -1;
        return std::sqrt(rem / std::max(p_.ldiag[lvl], 1e-300)) * (1 + 1e-12) + 1e-9;
    }

    // center of level lvl given assignments above: c = sum_{j>lvl} x_j * L[j][lvl]
    double center(int lvl) const { return sigma_[lvl + 1][lvl]; }

    void assign(int lvl, long v) {
        x_[lvl] = v;
        double c = center(lvl);
        double t = static_cast<double>(v) + c;
        rho_[lvl] = rho_[lvl + 1] + p_.ldiag[lvl] * t * t;
        for (int j = 0; j < lvl; ++j) sigma_[lvl][j] = sigma_[lvl + 1][j] + v * p_.lmu[lvl][j];
        // exact: norm_lvl = norm_{lvl+1} + v*(2*dot_{lvl+1}[lvl] + g[lvl][lvl]*v)
        if constexpr (std::is_same_v<Acc, __int128>) {
            const auto& grow = p_.gint64[lvl];
            __int128 cross = dot_[lvl + 1][lvl];
            norm_[lvl] = norm_[lvl + 1] + static_cast<__int128>(v) * (2 * cross + static_cast<__int128>(grow[lvl]) * v);
            for (int j = 0; j < lvl; ++j) dot_[lvl][j] = dot_[lvl + 1][j] + static_cast<__int128>(grow[j]) * v;
        } else {
            const auto& grow = p_.gintz[lvl];
            Acc cross = dot_[lvl + 1][lvl];
            norm_[lvl] = norm_[lvl + 1] + Acc(v) * (2 * cross + grow[lvl] * v);
            for (int j = 0; j < lvl; ++j) dot_[lvl][j] = dot_[lvl + 1][j] + grow[j] * v;
        }
    }

    void descend(int lvl, long v, bool suffix_zero) {
        assign(lvl, v);
        if (rho_[lvl] > p_.bound_d) return;
        bool zero_now = suffix_zero && v == 0;
        if (lvl == 0) {
            if (zero_now) return;  // zero vector
            Int nn;
            if constexpr (std::is_same_v<Acc, __int128>)
                nn = int128_to_mpz(norm_[0]);
            else
                nn = norm_[0];
            if (nn > 0 && within_bound(p_, nn)) emit_(x_, nn);
            return;
        }
        int nxt = lvl - 1;
        double c = center(nxt);
        double r = radius(nxt, rho_[lvl]);
        if (r < 0) return;
        long lo = static_cast<long>(std::ceil(-c - r));
        long hi = static_cast<long>(std::floor(-c + r));
        if (zero_now && lo < 0) lo = 0;
        // zig-zag from the rounded center, nearest first
        long x0 = std::lround(-c);
        if (x0 < lo) x0 = lo;
        if (x0 > hi) x0 = hi;
        if (lo > hi) return;
        long up = x0, down = x0 - 1;
        bool took_up_first = (-c - static_cast<double>(x0)) >= 0;
        while (up <= hi || down >= lo) {
            if (took_up_first) {
                if (up <= hi) descend(nxt, up++, zero_now);
                if (down >= lo) descend(nxt, down--, zero_now);
            } else {
                if (down >= lo) descend(nxt, down--, zero_now);
                if (up <= hi) descend(nxt, up++, zero_now);
            }
        }
    }

    const EnumProblem& p_;
    const std::function<void(const std::vector<long>&, const Int&)>& emit_;
    int n_;
    std::vector<long> x_;
    std::vector<std::vector<double>> sigma_;
    std::vector<double> rho_;
    std::vector<std::vector<Acc>> dot_;
    std::vector<Acc> norm_;
};

// Map reduced coordinates back and sign-normalize: first nonzero positive.
std::vector<long> to_original(const EnumProblem& p, const std::vector<long>& xr) {
    std::vector<long> out(p.n, 0);
    for (int j = 0; j < p.n; ++j) {
        long acc = 0;
        for (int i = 0; i < p.n; ++i) acc += xr[i] * p.tlong[i][j];
        out[j] = acc;
    }
    for (long v : out) {
        if (v > 0) break;
        if (v < 0) {
            for (auto& w : out) w = -w;
            break;
        }
    }
    return out;
}

// Run the enumeration, splitting the outermost coordinate across threads.
// emit receives (task ordinal, reduced coords, exact scaled norm); it is
// called concurrently when threads > 1.
void run_problem(const EnumProblem& p, int threads,
                 const std::function<void(int, const std::vector<long>&, const Int&)>& emit) {
    if (p.n == 0) return;
    long ntasks = p.outer_tasks();
    if (ntasks < 1) return;
    std::vector<long> tasks;
    for (long v = 0; v < ntasks; ++v) tasks.push_back(v);

    if (threads <= 1 || tasks.size() <= 1) {
        for (size_t t = 0; t < tasks.size(); ++t) {
            auto sink = [&](const std::vector<long>& x, const Int& nn) { emit(static_cast<int>(t), x, nn); };
            if (p.use_int64) {
                Walker<__int128> w(p, sink);
                w.run_outer(tasks[t]);
            } else {
                Walker<Int> w(p, sink);
                w.run_outer(tasks[t]);
            }
        }
        return;
    }

    std::atomic<size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mu;
    auto worker = [&] {
        try {
            for (;;) {
                size_t t = next.fetch_add(1);
                if (t >= tasks.size()) break;
                auto sink = [&](const std::vector<long>& x, const Int& nn) { emit(static_cast<int>(t), x, nn); };
                if (p.use_int64) {
                    Walker<__int128> w(p, sink);
                    w.run_outer(tasks[t]);
                } else {
                    Walker<Int> w(p, sink);
                    w.run_outer(tasks[t]);
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lk(error_mu);
            if (!first_error) first_error = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    int nw = std::min<int>(threads, static_cast<int>(tasks.size()));
    pool.reserve(nw);
    for (int i = 0; i < nw; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace

void for_each_shell_vector(const RatMat& gram, const Rat& bound, const EnumOptions& opts,
                           const std::function<void(std::span<const long>, const Rat&)>& visit) {
    if (gram.rows() == 0 || bound <= 0) return;
    EnumProblem p = prepare(gram, bound);
    std::atomic<long> emitted{0};
    std::atomic<bool> over{false};
    run_problem(p, opts.threads, [&](int, const std::vector<long>& xr, const Int& nn) {
        if (over.load(std::memory_order_relaxed)) return;
        if (emitted.fetch_add(1) >= opts.cap) {
            over.store(true);
            return;
        }
        std::vector<long> orig = to_original(p, xr);
        visit(orig, make_rat(nn, p.den));
    });
    if (over.load()) throw CapExceeded(opts.cap);
}

ShellListing shell(const RatMat& gram, const Rat& bound, const EnumOptions& opts) {
    ShellListing out;
    out.norm_bound = bound;
    if (gram.rows() == 0 || bound <= 0) return out;
    EnumProblem p = prepare(gram, bound);

    long tasks = p.outer_tasks();
    if (tasks < 1) return out;
    std::vector<std::vector<std::pair<std::vector<long>, Int>>> buckets(static_cast<size_t>(tasks));
    std::atomic<long> emitted{0};
    std::atomic<bool> over{false};
    run_problem(p, opts.threads, [&](int task, const std::vector<long>& xr, const Int& nn) {
        if (over.load(std::memory_order_relaxed)) return;
        if (emitted.fetch_add(1) >= opts.cap) {
            over.store(true);
            return;
        }
        buckets[task].emplace_back(to_original(p, xr), nn);
    });
    if (over.load()) throw CapExceeded(opts.cap);

    std::vector<std::pair<std::vector<long>, Int>> all;
    all.reserve(static_cast<size_t>(emitted.load()));
    for (auto& b : buckets)
        for (auto& e : b) all.emplace_back(std::move(e));
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.vectors.reserve(all.size());
    out.norms.reserve(all.size());
    for (auto& [v, nn] : all) {
        out.vectors.push_back(std::move(v));
        out.norms.push_back(make_rat(nn, p.den));
    }
    return out;
}

MinNormResult min_norm(const RatMat& gram, const EnumOptions& opts) {
    if (gram.rows() == 0) throw std::invalid_argument("min_norm: empty matrix");
    // bound: smallest diagonal entry of the reduced Gram (witnessed by a basis vector)
    LllResult red = lll_reduce(gram);
    Rat bound = red.gram.at(0, 0);
    for (int i = 1; i < red.gram.rows(); ++i) bound = std::min(bound, red.gram.at(i, i));

    std::mutex mu;
    MinNormResult best;
    bool have = false;
    for_each_shell_vector(gram, bound, opts, [&](std::span<const long> v, const Rat& nn) {
        std::lock_guard<std::mutex> lk(mu);
        std::vector<long> vv(v.begin(), v.end());
        if (!have || nn < best.norm || (nn == best.norm && vv < best.witness)) {
            best.norm = nn;
            best.witness = std::move(vv);
            have = true;
        }
    });
    if (!have) throw std::logic_error("min_norm: no vector found at the reduced diagonal bound");
    return best;
}

long kissing_count(const RatMat& gram, const EnumOptions& opts) {
    MinNormResult mn = min_norm(gram, opts);
    std::atomic<long> classes{0};
    for_each_shell_vector(gram, mn.norm, opts, [&](std::span<const long>, const Rat& nn) {
        if (nn == mn.norm) classes.fetch_add(1);
    });
    return 2 * classes.load();
}

CosetMinResult coset_min(const CosetQuery& query, const EnumOptions& opts) {
    const int n = query.gram.rows();
    if (static_cast<int>(query.offset.size()) != n) throw std::invalid_argument("coset_min: offset length mismatch");
    EnumProblem p = prepare(query.gram, Rat(1));  // bound replaced below

    // offset over the reduced basis: t' = t * T^{-1}
    RatMat tinv = inverse(p.transform.to_rat());
    std::vector<Rat> toff = row_times(query.offset, tinv);

    const RatMat* gred = nullptr;
    RatMat gred_store(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gred_store.at(i, j) = make_rat(p.gintz[i][j], p.den);
    gred = &gred_store;

    LdlResult f = ldl(*gred);
    std::vector<std::vector<double>> lmu(n, std::vector<double>(n, 0.0));
    std::vector<double> ld(n);
    std::vector<double> toff_d(n);
    for (int i = 0; i < n; ++i) {
        ld[i] = mpq_get_d(f.d[i].get_mpq_t());
        toff_d[i] = mpq_get_d(toff[i].get_mpq_t());
        for (int j = 0; j < i; ++j) lmu[i][j] = mpq_get_d(f.l.at(i, j).get_mpq_t());
    }

    auto exact_q = [&](const std::vector<long>& x) {
        std::vector<Rat> z(n);
        for (int i = 0; i < n; ++i) z[i] = Rat(x[i]) + toff[i];
        Rat acc = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) acc += z[i] * gred->at(i, j) * z[j];
        return acc;
    };

    // Babai rounding for the initial inclusive bound
    std::vector<long> babai(n, 0);
    {
        std::vector<double> shift(n, 0.0);
        for (int lvl = n - 1; lvl >= 0; --lvl) {
            double c = toff_d[lvl] + shift[lvl];
            long v = std::lround(-c);
            babai[lvl] = v;
            for (int j = 0; j < lvl; ++j) shift[j] += (v + toff_d[lvl]) * lmu[lvl][j];
        }
    }
    Rat bound = exact_q(babai);
    double bound_d = mpq_get_d(bound.get_mpq_t()) * (1 + kRelSlack) + kAbsSlack;

    CosetMinResult best{bound, babai};
    // DFS with rational offsets; exact value at the leaves.
    std::vector<long> x(n, 0);
    std::vector<std::vector<double>> sigma(n + 1, std::vector<double>(n, 0.0));
    std::vector<double> rho(n + 1, 0.0);

    std::function<void(int)> descend = [&](int lvl) {
        double c = toff_d[lvl] + sigma[lvl + 1][lvl];
        double rem = bound_d - rho[lvl + 1];
        if (rem < 0) return;
        double r = std::sqrt(rem / std::max(ld[lvl], 1e-300)) * (1 + 1e-12) + 1e-9;
        long lo = static_cast<long>(std::ceil(-c - r));
        long hi = static_cast<long>(std::floor(-c + r));
        if (lo > hi) return;
        long x0 = std::lround(-c);
        x0 = std::clamp(x0, lo, hi);
        long up = x0, down = x0 - 1;
        bool up_first = (-c - static_cast<double>(x0)) >= 0;
        auto visit = [&](long v) {
            x[lvl] = v;
            double t = static_cast<double>(v) + c;
            rho[lvl] = rho[lvl + 1] + ld[lvl] * t * t;
            if (rho[lvl] > bound_d) return;
            for (int j = 0; j < lvl; ++j) sigma[lvl][j] = sigma[lvl + 1][j] + v * lmu[lvl][j];
            if (lvl == 0) {
                Rat q = exact_q(x);
                std::vector<long> orig(n, 0);
                for (int j = 0; j < n; ++j) {
                    long acc = 0;
                    for (int i = 0; i < n; ++i) acc += x[i] * p.tlong[i][j];
                    orig[j] = acc;
                }
                if (q < best.min || (q == best.min && orig < best.witness)) {
                    best.min = q;
                    best.witness = orig;
                }
            } else {
                descend(lvl - 1);
            }
        };
        while (up <= hi || down >= lo) {
            if (up_first) {
                if (up <= hi) visit(up++);
                if (down >= lo) visit(down--);
            } else {
                if (down >= lo) visit(down--);
                if (up <= hi) visit(up++);
            }
        }
    };
    // map babai witness to original coordinates for the initial best
    {
        std::vector<long> orig(n, 0);
        for (int j = 0; j < n; ++j) {
            long acc = 0;
            for (int i = 0; i < n; ++i) acc += babai[i] * p.tlong[i][j];
            orig[j] = acc;
        }
        best.witness = orig;
    }
    descend(n - 1);
    return best;
}

}  // namespace antipode

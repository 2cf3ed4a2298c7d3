#include "antipode/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

namespace antipode {

namespace {

Rat leech_min_norm(const EnumOptions& opts) {
    static std::once_flag flag;
    static Rat mu;
    std::call_once(flag, [&] { mu = min_norm(gram_of(leech_generator()), opts).norm; });
    return mu;
}

}  // namespace

std::string gram_canonical_key(const RatMat& gram) {
    LllResult red = lll_reduce(gram);
    const int k = red.gram.rows();
    std::vector<Rat> diag, off;
    for (int i = 0; i < k; ++i) {
        diag.push_back(red.gram.at(i, i));
        for (int j = i + 1; j < k; ++j) off.push_back(red.gram.at(i, j));
    }
    std::sort(diag.begin(), diag.end());
    std::sort(off.begin(), off.end());

    // first three realized shell counts of the reduced Gram
    std::vector<std::pair<Rat, long>> shells;
    Rat bound = diag.empty() ? Rat(1) : diag.back();
    for (int attempt = 0; attempt < 8 && shells.size() < 3; ++attempt) {
        std::map<Rat, long> by_norm;
        ShellListing sl = shell(red.gram, bound, {});
        for (const Rat& nn : sl.norms) by_norm[nn]++;
        shells.clear();
        for (auto& [nn, cnt] : by_norm) {
            shells.emplace_back(nn, cnt);
            if (shells.size() == 3) break;
        }
        bound *= 2;
    }

    std::ostringstream os;
    os << "det=" << rat_to_string(det_bareiss(gram)) << "|diag=";
    for (size_t i = 0; i < diag.size(); ++i) os << (i ? "," : "") << rat_to_string(diag[i]);
    os << "|off=";
    for (size_t i = 0; i < off.size(); ++i) os << (i ? "," : "") << rat_to_string(off[i]);
    os << "|sh=";
    for (size_t i = 0; i < shells.size(); ++i)
        os << (i ? "," : "") << rat_to_string(shells[i].first) << ":" << shells[i].second;
    return os.str();
}

namespace {

// beta_star under a signed permutation of the basis.
Rat beta_star_variant(const RatMat& m, const std::vector<int>& perm, unsigned signs) {
    const int k = m.rows();
    Rat best(-1);
    auto entry = [&](int i, int j) {
        Rat v = m.at(perm[i], perm[j]);
        bool flip = (((signs >> i) ^ (signs >> j)) & 1u) != 0;
        return flip ? Rat(-v) : v;
    };
    for (int i = 0; i < k; ++i) {
        best = std::max(best, entry(i, i));
        for (int j = i + 1; j < k; ++j) best = std::max(best, entry(i, i) + entry(j, j) - 2 * entry(i, j));
    }
    return best;
}

TranslateChoice basis_plus_origin_choice(const RatMat& m, const Rat& mu) {
    const int k = m.rows();
    if (k > 6) throw std::invalid_argument("optimize_translates: sign/permutation search capped at k <= 6");
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    std::vector<int> best_perm = perm;
    unsigned best_signs = 0;
    Rat best = beta_star_variant(m, perm, 0);
    do {
        for (unsigned signs = 0; signs < (1u << k); ++signs) {
            Rat b = beta_star_variant(m, perm, signs);
            if (b < best) {
                best = b;
                best_perm = perm;
                best_signs = signs;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best >= mu) throw std::invalid_argument("optimize_translates: no admissible translate set below mu");

    TranslateChoice out;
    out.beta = best;
    out.set.points.assign(static_cast<size_t>(k) + 1, std::vector<Rat>(k, Rat(0)));
    for (int i = 0; i < k; ++i)
        out.set.points[static_cast<size_t>(i) + 1][best_perm[i]] = ((best_signs >> i) & 1u) ? Rat(-1) : Rat(1);
    return out;
}

struct CliqueGraph {
    int n = 0;
    std::vector<std::vector<bool>> adj;
};

void extend_clique(const CliqueGraph& g, std::vector<int>& current, std::vector<int>& cand,
                   std::vector<int>& best, int cap) {
    if (static_cast<int>(current.size()) > static_cast<int>(best.size())) best = current;
    if (static_cast<int>(current.size()) >= cap) return;
    if (current.size() + cand.size() <= best.size()) return;
    for (size_t idx = 0; idx < cand.size(); ++idx) {
        if (current.size() + (cand.size() - idx) <= best.size()) return;
        int v = cand[idx];
        std::vector<int> next;
        for (size_t j = idx + 1; j < cand.size(); ++j)
            if (g.adj[v][cand[j]]) next.push_back(cand[j]);
        current.push_back(v);
        extend_clique(g, current, next, best, cap);
        current.pop_back();
    }
}

TranslateChoice clique_choice(const RatMat& m, const Rat& mu) {
    const int k = m.rows();
    constexpr size_t kVertexCap = 512;
    constexpr int kCliqueCap = 8;

    // vertex pool: origin plus the shortest lattice vectors below mu
    ShellListing sl = shell(m, mu, {});
    std::vector<std::vector<Rat>> pts;
    pts.emplace_back(k, Rat(0));
    {
        // order by (norm, coords) and truncate
        std::vector<size_t> idx(sl.vectors.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            if (sl.norms[a] != sl.norms[b]) return sl.norms[a] < sl.norms[b];
            return sl.vectors[a] < sl.vectors[b];
        });
        for (size_t i = 0; i < idx.size() && pts.size() < kVertexCap; ++i) {
            if (sl.norms[idx[i]] >= mu) continue;
            std::vector<Rat> p(k), q(k);
            for (int c = 0; c < k; ++c) {
                p[c] = Rat(sl.vectors[idx[i]][c]);
                q[c] = -p[c];
            }
            pts.push_back(p);
            if (pts.size() < kVertexCap) pts.push_back(q);  // both signs are distinct translate points
        }
    }
    const int n = static_cast<int>(pts.size());

    // exact pairwise squared distances
    std::vector<std::vector<Rat>> dist(n, std::vector<Rat>(n, Rat(0)));
    std::set<Rat> grid;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            Rat q(0);
            for (int i = 0; i < k; ++i) {
                Rat di = pts[a][i] - pts[b][i];
                if (di == 0) continue;
                for (int j = 0; j < k; ++j) q += di * m.at(i, j) * (pts[a][j] - pts[b][j]);
            }
            dist[a][b] = dist[b][a] = q;
            if (q < mu) grid.insert(q);
        }

    long best_s = 1;
    Rat best_beta(0);
    std::vector<int> best_set{0};
    for (const Rat& beta : grid) {
        CliqueGraph g;
        g.n = n;
        g.adj.assign(n, std::vector<bool>(n, false));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b && dist[a][b] <= beta) g.adj[a][b] = true;
        std::vector<int> cand(n), cur, best;
        for (int i = 0; i < n; ++i) cand[i] = i;
        extend_clique(g, cur, cand, best, kCliqueCap);
        if (static_cast<long>(best.size()) > best_s) {
            best_s = static_cast<long>(best.size());
            best_set = best;
            // tightest realized beta within the chosen set
            Rat realized(0);
            for (size_t a = 0; a < best.size(); ++a)
                for (size_t b = a + 1; b < best.size(); ++b) realized = std::max(realized, dist[best[a]][best[b]]);
            best_beta = realized;
        }
    }

    TranslateChoice out;
    out.beta = best_beta;
    for (int v : best_set) out.set.points.push_back(pts[v]);
    if (out.beta >= mu) throw std::invalid_argument("optimize_translates: no admissible translate set below mu");
    return out;
}

}  // namespace

TranslateChoice optimize_translates(const RatMat& m, const Rat& mu, TranslateMode mode) {
    if (!m.is_symmetric()) throw std::invalid_argument("optimize_translates: metric not symmetric");
    return mode == TranslateMode::BasisPlusOrigin ? basis_plus_origin_choice(m, mu) : clique_choice(m, mu);
}

namespace {

SectionCandidate make_forced(const ScaledLattice& ambient, const IntMat& rows) {
    SaturationResult sat = saturate_with_index(ambient, rows);
    SectionCandidate c;
    c.forced = true;
    if (sat.index == 1) {
        // keep the caller's basis: beta depends on it
        c.lattice = make_lattice(rows, ambient.norm_divisor);
    } else {
        c.lattice = sat.lattice;
    }
    return c;
}

// Collect, for each key, the lexicographically smallest shell vector. The
// reduction is order-independent, so threaded enumeration stays deterministic.
template <typename Key>
class LexMinCollector {
public:
    void offer(const Key& key, std::span<const long> v) {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = map_.find(key);
        std::vector<long> vec(v.begin(), v.end());
        if (it == map_.end())
            map_.emplace(key, std::move(vec));
        else if (vec < it->second)
            it->second = std::move(vec);
    }
    const std::map<Key, std::vector<long>>& result() const { return map_; }

private:
    std::mutex mu_;
    std::map<Key, std::vector<long>> map_;
};

}  // namespace

std::vector<SectionCandidate> enumerate_sections(const SearchConfig& config) {
    const int k = config.section_dim;
    if (k < 1 || k > 6) throw std::invalid_argument("enumerate_sections: section dimension must be 1..6");
    const ScaledLattice& leech = leech_generator();
    RatMat leech_gram = gram_of(leech);

    std::vector<SectionCandidate> out;
    for (const IntMat& rows : config.forced_sections) {
        if (rows.rows() != k) throw std::invalid_argument("enumerate_sections: forced section of wrong dimension");
        out.push_back(make_forced(leech, rows));
    }

    auto rows_from_coords = [&](const std::vector<std::vector<long>>& coords) {
        IntMat rows(static_cast<int>(coords.size()), leech.ambient_dim());
        for (size_t r = 0; r < coords.size(); ++r)
            for (int c = 0; c < leech.ambient_dim(); ++c) {
                Int acc = 0;
                for (int i = 0; i < leech.rank(); ++i) acc += coords[r][i] * leech.basis.at(i, c);
                rows.at(static_cast<int>(r), c) = acc;
            }
        return rows;
    };

    if (config.exhaustive && k == 1) {
        LexMinCollector<Rat> by_norm;
        for_each_shell_vector(leech_gram, config.shell_bound, config.enumeration,
                              [&](std::span<const long> v, const Rat& nn) { by_norm.offer(nn, v); });
        for (const auto& [nn, v] : by_norm.result()) {
            SectionCandidate c;
            c.lattice = saturate(leech, rows_from_coords({v}));
            out.push_back(std::move(c));
        }
        return out;
    }
    if (config.exhaustive && k == 2) {
        // first generator: one representative per realized norm
        LexMinCollector<Rat> by_norm;
        for_each_shell_vector(leech_gram, config.shell_bound, config.enumeration,
                              [&](std::span<const long> v, const Rat& nn) { by_norm.offer(nn, v); });
        for (const auto& [na, va] : by_norm.result()) {
            // second generator: one representative per (norm, inner product with va)
            std::vector<Int> pa(leech.rank());  // gram * va
            for (int i = 0; i < leech.rank(); ++i) {
                Rat acc(0);
                for (int j = 0; j < leech.rank(); ++j) acc += leech_gram.at(i, j) * Rat(va[j]);
                pa[i] = acc.get_num();  // integral lattice
            }
            LexMinCollector<std::pair<Rat, Rat>> by_class;
            for_each_shell_vector(leech_gram, config.shell_bound, config.enumeration,
                                  [&](std::span<const long> w, const Rat& nw) {
                Rat ip(0);
                for (int i = 0; i < leech.rank(); ++i) ip += Rat(pa[i]) * Rat(w[i]);
                // both signs of a class are distinct pair choices; canonicalize to ip >= 0
                if (ip < 0) ip = -ip;
                by_class.offer({nw, ip}, w);
            });
            for (const auto& [cls, w] : by_class.result()) {
                // span{va, w} = span{va, -w}, so the |ip| class key loses nothing
                std::vector<std::vector<long>> pair_coords{va, w};
                IntMat rows = rows_from_coords(pair_coords);
                if (rank_of(rows.to_rat()) != 2) continue;
                SectionCandidate c;
                c.lattice = saturate(leech, rows);
                out.push_back(std::move(c));
            }
        }
        return out;
    }
    if (config.exhaustive) throw std::invalid_argument("enumerate_sections: exhaustive mode supports k <= 2");

    if (config.budget <= 0) return out;

    // seeded sampling from the shell: count classes, then fetch by index in a
    // second, serial (order-stable) pass
    long long total = 0;
    {
        std::atomic<long long> cnt{0};
        for_each_shell_vector(leech_gram, config.shell_bound, config.enumeration,
                              [&](std::span<const long>, const Rat&) { cnt.fetch_add(1); });
        total = cnt.load();
    }
    if (total == 0) return out;

    std::mt19937_64 rng(config.seed);
    std::vector<std::vector<long long>> draws(static_cast<size_t>(config.budget));
    std::set<long long> wanted;
    for (long b = 0; b < config.budget; ++b) {
        for (int i = 0; i < k; ++i) {
            long long ix = static_cast<long long>(rng() % static_cast<unsigned long long>(total));
            draws[static_cast<size_t>(b)].push_back(ix);
            wanted.insert(ix);
        }
    }
    std::map<long long, std::vector<long>> fetched;
    {
        long long pos = 0;
        EnumOptions serial = config.enumeration;
        serial.threads = 1;
        for_each_shell_vector(leech_gram, config.shell_bound, serial,
                              [&](std::span<const long> v, const Rat&) {
            if (wanted.count(pos)) fetched[pos] = std::vector<long>(v.begin(), v.end());
            ++pos;
        });
    }
    for (long b = 0; b < config.budget; ++b) {
        std::vector<std::vector<long>> coords;
        for (long long ix : draws[static_cast<size_t>(b)]) coords.push_back(fetched.at(ix));
        IntMat rows = rows_from_coords(coords);
        if (rank_of(rows.to_rat()) != k) continue;  // dependent draw, skipped
        SectionCandidate c;
        c.lattice = saturate(leech, rows);
        out.push_back(std::move(c));
    }
    return out;
}

SearchReport run_search(const SearchConfig& config) {
    SearchReport report;
    report.seed = config.seed;
    report.section_dim = config.section_dim;
    report.s_target = config.s_target;
    report.shell_bound = config.shell_bound;

    Rat mu = leech_min_norm(config.enumeration);
    std::vector<SectionCandidate> sections = enumerate_sections(config);

    std::set<std::string> seen;
    for (const SectionCandidate& cand : sections) {
        ++report.candidates_tried;
        RatMat kg = gram_of(cand.lattice);
        std::string key = gram_canonical_key(kg);
        if (config.dedupe && !seen.insert(key).second) {
            ++report.candidates_deduped;
            continue;
        }

        SearchEntry e;
        e.dim = leech_generator().ambient_dim() - config.section_dim;
        e.section_gram = kg;
        e.key = key;

        RatMat m = inverse(kg);
        TranslateChoice choice;
        try {
            choice = optimize_translates(m, mu, config.s_target);
        } catch (const std::invalid_argument&) {
            continue;  // no admissible translate set; candidate contributes nothing
        }
        if (!validate_translates(m, choice.set, choice.beta)) continue;

        e.beta = choice.beta;
        e.s = choice.set.size();
        e.density = theorem1_density(det_bareiss(m), Rat(1), e.s, e.beta, mu, e.dim);

        AntipodeCertificate cert;
        cert.ambient_dim = leech_generator().ambient_dim();
        cert.section_dim = config.section_dim;
        cert.packing_dim = e.dim;
        cert.mu = mu;
        cert.beta = e.beta;
        cert.s = e.s;
        cert.section_gram = kg;
        cert.dual_gram = m;
        cert.det_m = det_bareiss(m);
        cert.center_density = e.density;
        cert.checks.push_back({"beta-valid", CheckState::Pass, rat_to_string(e.beta)});
        cert.checks.push_back({"m-inverse-of-k", CheckState::Pass, ""});
        cert.checks.push_back({"cross-section-verified", CheckState::Pass, "saturated inside the ambient lattice"});
        cert.checks.push_back({"overlap-audited", CheckState::Skipped, "not requested"});
        e.certificate = std::move(cert);

        report.entries.push_back(std::move(e));
    }

    std::sort(report.entries.begin(), report.entries.end(), [](const SearchEntry& a, const SearchEntry& b) {
        int c = a.density.cmp(b.density);
        if (c != 0) return c > 0;
        return a.key < b.key;
    });
    for (size_t i = 0; i < report.entries.size(); ++i)
        if (!report.best_per_dim.count(report.entries[i].dim)) report.best_per_dim[report.entries[i].dim] = i;
    return report;
}

void write_report(std::ostream& out, const SearchReport& report) {
    out << "search-report\n";
    out << "seed: " << report.seed << "\n";
    out << "generator: mt19937_64\n";
    out << "section-dim: " << report.section_dim << "\n";
    out << "shell-bound: " << rat_to_string(report.shell_bound) << "\n";
    out << "mode: " << (report.s_target == TranslateMode::BasisPlusOrigin ? "basis-plus-origin" : "clique-search")
        << "\n";
    out << "candidates-tried: " << report.candidates_tried << "\n";
    out << "candidates-deduped: " << report.candidates_deduped << "\n";
    out << "entries: " << report.entries.size() << "\n";
    for (const SearchEntry& e : report.entries) {
        out << "entry " << e.dim << " " << e.density.decimal(20) << " " << e.density.term_product() << " " << e.key
            << "\n";
    }
    for (const SearchEntry& e : report.entries) {
        out << "\n";
        write_certificate(out, e.certificate);
    }
}

}  // namespace antipode

#include "antipode/antipode.hpp"

#include <mpfr.h>

#include <map>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>

namespace antipode {

Rat beta_star(const RatMat& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("beta_star: matrix not symmetric");
    const int k = m.rows();
    if (k == 0) throw std::invalid_argument("beta_star: empty matrix");
    Rat best = m.at(0, 0);
    for (int i = 0; i < k; ++i) {
        best = std::max(best, m.at(i, i));
        for (int j = i + 1; j < k; ++j) best = std::max(best, m.at(i, i) + m.at(j, j) - 2 * m.at(i, j));
    }
    return best;
}

namespace {

Rat rat_pow(const Rat& base, long e) {
    Rat out(1);
    Rat b = base;
    long n = e;
    while (n > 0) {
        if (n & 1) out *= b;
        b *= b;
        n >>= 1;
    }
    return out;
}

}  // namespace

QuadSurd theorem1_density(const Rat& det_m, const Rat& det_lambda, long s, const Rat& beta,
                          const Rat& mu, int l) {
    if (s < 1) throw std::invalid_argument("theorem1_density: s < 1");
    if (det_m <= 0 || det_lambda <= 0) throw std::invalid_argument("theorem1_density: determinants must be positive");
    if (beta < 0 || beta >= mu) throw std::invalid_argument("theorem1_density: beta outside [0, mu)");
    if (l < 0) throw std::invalid_argument("theorem1_density: negative packing dimension");
    Rat r = (mu - beta) / 4;
    QuadSurd out = QuadSurd(Rat(s)) * QuadSurd::sqrt_of(det_m / det_lambda);
    out = out * QuadSurd(rat_pow(r, l / 2));
    if (l % 2) out = out * QuadSurd::sqrt_of(r);
    return out;
}

TranslateSet TranslateSet::basis_plus_origin(int k) {
    TranslateSet t;
    t.points.assign(static_cast<size_t>(k) + 1, std::vector<Rat>(k, Rat(0)));
    for (int i = 0; i < k; ++i) t.points[static_cast<size_t>(i) + 1][i] = 1;
    return t;
}

bool validate_translates(const RatMat& m, const TranslateSet& t, const Rat& beta) {
    const int k = m.rows();
    for (const auto& p : t.points)
        if (static_cast<int>(p.size()) != k) return false;
    for (size_t a = 0; a < t.points.size(); ++a)
        for (size_t b = a + 1; b < t.points.size(); ++b) {
            std::vector<Rat> d(k);
            bool all_zero = true;
            for (int i = 0; i < k; ++i) {
                d[i] = t.points[a][i] - t.points[b][i];
                if (d[i] != 0) all_zero = false;
            }
            if (all_zero) return false;  // duplicate point
            Rat q(0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) q += d[i] * m.at(i, j) * d[j];
            if (q > beta) return false;
        }
    return true;
}

const char* to_string(CheckState s) {
    switch (s) {
        case CheckState::Pass: return "pass";
        case CheckState::Fail: return "fail";
        case CheckState::Assumed: return "assumed";
        case CheckState::Skipped: return "skipped";
    }
    return "?";
}

NamedCheck* AntipodeCertificate::find_check(const std::string& name) {
    for (auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

AntipodeCertificate theorem2_density(const RatMat& k, int n, const Rat& mu) {
    if (!k.is_symmetric()) throw std::invalid_argument("theorem2_density: K not symmetric");
    ldl(k);  // rejects non-positive-definite sections
    if (k.rows() >= n) throw std::invalid_argument("theorem2_density: section dimension must be below ambient dimension");

    AntipodeCertificate cert;
    cert.ambient_dim = n;
    cert.section_dim = k.rows();
    cert.packing_dim = n - k.rows();
    cert.mu = mu;
    cert.section_gram = k;
    cert.dual_gram = inverse(k);
    cert.det_m = det_bareiss(cert.dual_gram);
    cert.beta = beta_star(cert.dual_gram);
    if (cert.beta >= mu) throw std::invalid_argument("section too sparse for antipode gain");
    cert.s = k.rows() + 1;
    // det Lambda = 1: self-dual ambient hypothesis
    cert.center_density = theorem1_density(cert.det_m, Rat(1), cert.s, cert.beta, mu, cert.packing_dim);

    bool minv_ok = k * cert.dual_gram == RatMat::identity(k.rows());
    bool translates_ok = validate_translates(cert.dual_gram, TranslateSet::basis_plus_origin(k.rows()), cert.beta);
    cert.checks.push_back({"beta-valid", translates_ok && cert.beta < mu ? CheckState::Pass : CheckState::Fail,
                           rat_to_string(cert.beta)});
    cert.checks.push_back({"m-inverse-of-k", minv_ok ? CheckState::Pass : CheckState::Fail, ""});
    cert.checks.push_back({"cross-section-verified", CheckState::Assumed, "ambient membership not checked here"});
    cert.checks.push_back({"overlap-audited", CheckState::Skipped, "not requested"});
    return cert;
}

AuditResult audit_packing(const ScaledLattice& ambient, const IntMat& section_rows,
                          const TranslateSet& t, const Rat& beta, const AuditOptions& opts) {
    AuditResult res;
    const int k = section_rows.rows();
    const int n = ambient.ambient_dim();
    if (section_rows.cols() != n) throw std::invalid_argument("audit: section rows live in a different space");
    if (t.points.empty()) throw std::invalid_argument("audit: empty translate set");
    for (const auto& p : t.points)
        if (static_cast<int>(p.size()) != k) throw std::invalid_argument("audit: translate coordinate length mismatch");

    // section Gram and projected metric
    ScaledLattice section{section_rows, ambient.norm_divisor};
    RatMat kg = gram_of(section);
    RatMat m = inverse(kg);

    Rat mu = min_norm(gram_of(ambient), opts.enumeration).norm;

    // translate difference set, exact coordinates over the dual basis
    std::map<std::vector<Rat>, bool> deltas;
    for (size_t a = 0; a < t.points.size(); ++a)
        for (size_t b = 0; b < t.points.size(); ++b) {
            std::vector<Rat> d(k);
            for (int i = 0; i < k; ++i) d[i] = t.points[a][i] - t.points[b][i];
            deltas[d] = true;
        }

    // pi_U(w) over the dual basis is (w.a_1, ..., w.a_k); precompute basis . A^T
    IntMat proj = ambient.basis * section_rows.transpose();  // rank x k integer

    Rat bound = mu + beta + opts.bound_extension;
    std::optional<Rat> best;
    bool center_collision = false;

    try {
        std::mutex best_lock;
        for_each_shell_vector(gram_of(ambient), bound, opts.enumeration,
                              [&](std::span<const long> x, const Rat& norm) {
            // c_j = (x . proj_j) / d
            std::vector<Rat> c(k);
            for (int j = 0; j < k; ++j) {
                Int acc = 0;
                for (int i = 0; i < ambient.rank(); ++i) acc += x[i] * proj.at(i, j);
                c[j] = make_rat(acc, ambient.norm_divisor);
            }
            // the difference set is symmetric, so the sign class suffices
            if (deltas.count(c) == 0) return;
            // |pi_V(w)|^2 = |w|^2 - c M c^T
            Rat proj_norm(0);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) proj_norm += c[i] * m.at(i, j) * c[j];
            Rat sep = norm - proj_norm;
            std::lock_guard<std::mutex> lk(best_lock);
            if (sep == 0) {
                bool c_zero = true;
                for (const auto& v : c)
                    if (v != 0) { c_zero = false; break; }
                if (!c_zero) center_collision = true;  // two translates share a center
                return;
            }
            if (!best || sep < *best) best = sep;
        });
    } catch (const CapExceeded& e) {
        res.skipped = true;
        res.reason = e.what();
        return res;
    }

    if (center_collision) {
        res.min_separation_sq = 0;
        res.pass = false;
        res.reason = "distinct translates share a sphere center";
        return res;
    }
    if (!best) {
        // nothing in range: every separation exceeds the enumeration bound
        res.min_separation_sq = bound;
        res.pass = true;
        res.reason = "no candidate below the enumeration bound";
        return res;
    }
    res.min_separation_sq = *best;
    res.pass = *best >= mu - beta;
    return res;
}

std::string center_density_to_density(const QuadSurd& delta, int n, int digits) {
    if (n < 1) throw std::invalid_argument("center_density_to_density: n < 1");
    if (digits < 1) throw std::invalid_argument("center_density_to_density: digits < 1");
    const mpfr_prec_t prec = static_cast<mpfr_prec_t>(digits * 4 + 96);
    mpfr_t pi, vn, g, x, half_n;
    mpfr_inits2(prec, pi, vn, g, x, half_n, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi, MPFR_RNDN);
    // V_n = pi^(n/2) / Gamma(n/2 + 1)
    mpfr_set_si(half_n, n, MPFR_RNDN);
    mpfr_div_ui(half_n, half_n, 2, MPFR_RNDN);
    mpfr_pow(vn, pi, half_n, MPFR_RNDN);
    mpfr_add_ui(half_n, half_n, 1, MPFR_RNDN);
    mpfr_gamma(g, half_n, MPFR_RNDN);
    mpfr_div(vn, vn, g, MPFR_RNDN);
    // x = delta * V_n
    mpfr_set_q(x, delta.rational_part().get_mpq_t(), MPFR_RNDN);
    if (!delta.is_rational()) {
        mpfr_t rad;
        mpfr_init2(rad, prec);
        mpfr_set_z(rad, delta.radicand().get_mpz_t(), MPFR_RNDN);
        mpfr_sqrt(rad, rad, MPFR_RNDN);
        mpfr_mul(x, x, rad, MPFR_RNDN);
        mpfr_clear(rad);
    }
    mpfr_mul(x, x, vn, MPFR_RNDN);

    mpfr_exp_t e10 = 0;
    char* raw = mpfr_get_str(nullptr, &e10, 10, static_cast<size_t>(digits), x, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    mpfr_clears(pi, vn, g, x, half_n, static_cast<mpfr_ptr>(nullptr));

    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) mant.erase(0, 1);
    std::string out;
    long e = static_cast<long>(e10);
    if (mant.empty() || mant.find_first_not_of('0') == std::string::npos) return "0";
    if (e <= 0) {
        out = "0." + std::string(static_cast<size_t>(-e), '0') + mant;
    } else if (static_cast<size_t>(e) >= mant.size()) {
        out = mant + std::string(static_cast<size_t>(e) - mant.size(), '0');
    } else {
        out = mant.substr(0, static_cast<size_t>(e)) + "." + mant.substr(static_cast<size_t>(e));
    }
    return neg ? "-" + out : out;
}

void write_certificate(std::ostream& out, const AntipodeCertificate& cert) {
    out << "certificate antipode\n";
    out << "ambient-dim: " << cert.ambient_dim << "\n";
    out << "section-dim: " << cert.section_dim << "\n";
    out << "packing-dim: " << cert.packing_dim << "\n";
    out << "mu: " << rat_to_string(cert.mu) << "\n";
    out << "beta: " << rat_to_string(cert.beta) << "\n";
    out << "s: " << cert.s << "\n";
    out << "det-m: " << rat_to_string(cert.det_m) << "\n";
    out << "center-density-exact: " << cert.center_density.term_product() << "\n";
    out << "center-density-decimal: " << cert.center_density.decimal(50) << "\n";
    for (const auto& c : cert.checks) {
        out << "check " << c.name << ": " << to_string(c.state);
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << "\n";
    }
    out << "section-gram:\n";
    write_gram(out, cert.section_gram);
    out << "dual-gram:\n";
    write_gram(out, cert.dual_gram);
}

}  // namespace antipode

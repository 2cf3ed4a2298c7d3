#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "antipode/enumerate.hpp"
#include "antipode/lattice.hpp"
#include "antipode/quadsurd.hpp"

namespace antipode {

// Least admissible beta for the origin-plus-dual-basis translate set:
// max over M_ii and M_ii + M_jj - 2 M_ij.
Rat beta_star(const RatMat& m);

// Center density of a packing built from s translates of an (n-k)-section
// with projected determinant detM inside an ambient of determinant
// detLambda and minimal norm mu:
//   s * sqrt(detM / detLambda) * ((mu - beta)/4)^(l/2)
// Throws when beta >= mu.
QuadSurd theorem1_density(const Rat& det_m, const Rat& det_lambda, long s, const Rat& beta,
                          const Rat& mu, int l);

// Translate points in coordinates over the projected lattice's basis.
struct TranslateSet {
    std::vector<std::vector<Rat>> points;

    long size() const { return static_cast<long>(points.size()); }
    static TranslateSet basis_plus_origin(int k);  // {0, e_1, ..., e_k}
};

// True iff points are pairwise distinct and all pairwise squared distances
// under the metric m stay <= beta.
bool validate_translates(const RatMat& m, const TranslateSet& t, const Rat& beta);

enum class CheckState { Pass, Fail, Assumed, Skipped };
const char* to_string(CheckState s);

struct NamedCheck {
    std::string name;
    CheckState state;
    std::string detail;
};

// Full witness of one antipode construction.
struct AntipodeCertificate {
    int ambient_dim = 0;   // n
    int section_dim = 0;   // k
    int packing_dim = 0;   // l = n - k
    Rat mu;
    Rat beta;
    long s = 0;
    RatMat section_gram;   // K
    RatMat dual_gram;      // M = K^{-1}
    Rat det_m;
    QuadSurd center_density;
    std::vector<NamedCheck> checks;

    NamedCheck* find_check(const std::string& name);
};

// Self-dual ambient specialization: s = k+1, translate set = basis plus
// origin, beta = beta_star(K^{-1}). Throws "section too sparse for antipode
// gain" when beta_star >= mu.
AntipodeCertificate theorem2_density(const RatMat& k, int n, const Rat& mu);

// Independent non-overlap audit. Enumerates ambient vectors of norm up to
// mu + beta + bound_extension, bins them by projection image against the
// translate difference set, and reports the minimal squared distance
// between distinct packing centers.
struct AuditOptions {
    Rat bound_extension = Rat(1);
    EnumOptions enumeration;
};
struct AuditResult {
    Rat min_separation_sq;  // over everything the enumeration saw
    bool pass = false;      // min_separation_sq >= mu - beta certified
    bool skipped = false;
    std::string reason;
};
AuditResult audit_packing(const ScaledLattice& ambient, const IntMat& section_rows,
                          const TranslateSet& t, const Rat& beta, const AuditOptions& opts = {});

// Delta = delta_center * V_n with V_n = pi^(n/2) / Gamma(n/2 + 1), rendered
// to the requested number of significant digits (>= 50 by default).
std::string center_density_to_density(const QuadSurd& delta, int n, int digits = 50);

void write_certificate(std::ostream& out, const AntipodeCertificate& cert);

}  // namespace antipode

#include "antipode/verify.hpp"

#include <algorithm>
#include <sstream>

namespace antipode {

namespace {

void check(std::vector<CheckLine>& out, const std::string& name, bool pass, const std::string& detail = "") {
    out.push_back({name, pass, detail});
}

template <typename F>
void guarded(std::vector<CheckLine>& out, const std::string& name, F&& f) {
    try {
        f();
    } catch (const std::exception& e) {
        out.push_back({name, false, std::string("exception: ") + e.what()});
    }
}

int printed_decimal_places(const std::string& s) {
    auto dot = s.find('.');
    return dot == std::string::npos ? 0 : static_cast<int>(s.size() - dot - 1);
}

// The projected lattice must coincide with the dual of the section
// (self-dual ambient): integer coordinates over the dual basis with unit
// index, and the project() Gram congruent to M by an explicit unimodular T.
void check_projection_duality(std::vector<CheckLine>& out, const std::string& tag,
                              const ScaledLattice& ambient, const IntMat& rows, const RatMat& k_gram,
                              const RatMat& m_gram) {
    const int k = rows.rows();
    // coordinates of projected generators over the dual basis: basis . rows^T / d
    IntMat proj_int(ambient.rank(), k);
    {
        RatMat p = ambient.basis.to_rat() * rows.to_rat().transpose();
        for (int r = 0; r < ambient.rank(); ++r)
            for (int c = 0; c < k; ++c) {
                Rat v = p.at(r, c) / Rat(ambient.norm_divisor);
                if (v.get_den() != 1) {
                    check(out, tag + " projection-in-dual", false, "non-integer dual coordinate");
                    return;
                }
                proj_int.at(r, c) = v.get_num();
            }
    }
    HnfResult h = hnf(proj_int);
    bool unit_index = h.rank == k;
    for (int i = 0; i < k && unit_index; ++i)
        for (int j = 0; j < k; ++j)
            if (h.hermite.at(i, j) != (i == j ? 1 : 0)) { unit_index = false; break; }
    check(out, tag + " projection-equals-dual", unit_index,
          "pi_U(ambient) spans the dual basis with index 1");

    // explicit congruence for the project() output
    GramLattice pg = project(ambient, Subspace{rows.to_rat()});
    RatMat coords = ambient.basis.to_rat() * rows.to_rat().transpose() * inverse(rows.to_rat() * rows.to_rat().transpose());
    Int den = 1;
    for (int r = 0; r < coords.rows(); ++r)
        for (int c = 0; c < k; ++c) lcm(den.get_mpz_t(), den.get_mpz_t(), coords.at(r, c).get_den().get_mpz_t());
    IntMat ci(coords.rows(), k);
    for (int r = 0; r < coords.rows(); ++r)
        for (int c = 0; c < k; ++c) {
            Rat v = coords.at(r, c) * Rat(den);
            ci.at(r, c) = v.get_num();
        }
    HnfResult hh = hnf(ci);
    RatMat basis_p(k, k);
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) basis_p.at(r, c) = make_rat(hh.hermite.at(r, c), den);
    RatMat t = basis_p * k_gram;  // coordinates of project()'s basis over the dual basis
    bool t_int = t.is_integral();
    bool t_uni = t_int && abs(det_bareiss(t)) == 1;
    bool congruent = t_uni && t * m_gram * t.transpose() == pg.gram;
    check(out, tag + " projection-congruent-to-M", congruent,
          "project() Gram = T M T^T with unimodular T");
}

}  // namespace

bool all_pass(const std::vector<CheckLine>& lines) {
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine& c) { return c.pass; });
}

std::vector<CheckLine> verify_paper(const VerifyOptions& opts) {
    std::vector<CheckLine> out;
    std::vector<int> dims = opts.dims.empty() ? catalog_dims() : opts.dims;

    bool leech_needed = false;
    for (int d : dims)
        if (d < 24) leech_needed = true;

    if (leech_needed) {
        guarded(out, "leech integrity", [&] {
            const ScaledLattice& leech = leech_generator();
            RatMat g = gram_of(leech);
            check(out, "leech gram-integral", g.is_integral());
            check(out, "leech det-1", det_bareiss(g) == 1, "determinant of the Gram matrix");
            if (opts.deep) {
                MinNormResult mn = min_norm(g, opts.enumeration);
                check(out, "leech min-norm-4", mn.norm == 4, "witness " + [&] {
                    std::ostringstream os;
                    for (size_t i = 0; i < mn.witness.size(); ++i) os << (i ? "," : "") << mn.witness[i];
                    return os.str();
                }());
                long kiss = kissing_count(g, opts.enumeration);
                check(out, "leech kissing-196560", kiss == 196560, std::to_string(kiss));
            }
        });
    }

    for (int dim : dims) {
        std::string tag = "dim" + std::to_string(dim);
        guarded(out, tag, [&] {
            PaperConstruction c = construction(dim);
            if (opts.perturb_section_gram) {
                auto [pd, pi, pj] = *opts.perturb_section_gram;
                if (pd == dim) {
                    c.section_gram.at(pi, pj) += make_rat(1, 7);
                    if (pi != pj) c.section_gram.at(pj, pi) += make_rat(1, 7);
                }
            }

            check(out, tag + " M-inverse-of-K", inverse(c.section_gram) == c.dual_gram);
            Rat bs = beta_star(c.dual_gram);
            check(out, tag + " beta-star", bs == c.beta && bs < c.mu, rat_to_string(bs));

            AntipodeCertificate cert = theorem2_density(c.section_gram, c.ambient_dim, c.mu);
            check(out, tag + " density-exact", cert.center_density == c.expected_density,
                  cert.center_density.term_product());
            std::string rounded = cert.center_density.decimal_places(printed_decimal_places(c.expected_decimal));
            check(out, tag + " density-decimal", rounded == c.expected_decimal, rounded);

            auto prior = parse_rat(c.prior_decimal);
            check(out, tag + " record-strict", prior && cert.center_density.cmp(*prior) > 0,
                  "exact > " + c.prior_decimal);

            if (c.ambient == AmbientTag::P48pAssumed) {
                NamedCheck* cs = cert.find_check("cross-section-verified");
                check(out, tag + " cross-section-assumed", cs && cs->state == CheckState::Assumed,
                      "ambient generator out of scope");
                return;
            }

            // Leech cross-section verification
            const ScaledLattice& leech = leech_generator();
            const IntMat& rows = *c.section_rows;
            bool members = true;
            for (int r = 0; r < rows.rows() && members; ++r) members = is_member(leech, rows.row(r));
            check(out, tag + " rows-member", members);

            SaturationResult sat = saturate_with_index(leech, rows);
            check(out, tag + " saturation-index-1", sat.index == 1, sat.index.get_str());

            ScaledLattice given = make_lattice(rows, leech.norm_divisor);
            check(out, tag + " gram-matches-K", gram_of(given) == c.section_gram);

            check_projection_duality(out, tag, leech, rows, c.section_gram, c.dual_gram);

            if (opts.audit) {
                TranslateSet s = TranslateSet::basis_plus_origin(rows.rows());
                AuditOptions ao;
                ao.enumeration = opts.enumeration;
                AuditResult a = audit_packing(leech, rows, s, c.beta, ao);
                Rat target = c.mu - c.beta;
                check(out, tag + " overlap-audit",
                      !a.skipped && a.pass && a.min_separation_sq >= target,
                      a.skipped ? "skipped: " + a.reason
                                : "min separation^2 = " + rat_to_string(a.min_separation_sq) +
                                      ", bound " + rat_to_string(target));
            }
        });
    }

    guarded(out, "table1", [&] {
        std::vector<Table1Row> rows = table1();
        check(out, "table1 row-count", rows.size() == 7, std::to_string(rows.size()));
        bool strict = true;
        for (const auto& r : rows) {
            PaperConstruction c = construction(r.dim);
            auto prior = parse_rat(r.prior_decimal);
            if (!prior || c.expected_density.cmp(*prior) <= 0) strict = false;
        }
        check(out, "table1 strictly-improved", strict);
    });

    return out;
}

}  // namespace antipode

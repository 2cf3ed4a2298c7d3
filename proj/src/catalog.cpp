#include "antipode/catalog.hpp"

#include <map>
#include <mutex>

namespace antipode {

// Coordinate convention. The Leech basis below is expressed over sqrt(8) in
// coordinates where the binary Golay code contains the supports needed by
// the section generators: {0..7}, {0..3, 8..11}, {0,1,4,5,8,9,12,13} and
// {0,2,4,6,8,10,12,14} are octads (the first 16 coordinates carry the
// affine-hyperplane structure of the 16-set complementary to an octad).
// Any self-duality / minimal-norm / membership failure against this basis
// would indicate a transcription error in the data tables, not an algorithm
// bug; the verification suite checks all of it.
#include "catalog_data.inc"

namespace {

IntMat mat_from(const int* data, int rows, int cols) {
    IntMat m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = data[r * cols + c];
    return m;
}

Int ipow(unsigned long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

RatMat scaled_int_mat(std::initializer_list<std::initializer_list<long>> m, long den) {
    RatMat out(m);
    return out.scaled(make_rat(1, den));
}

struct CatalogData {
    std::map<int, PaperConstruction> constructions;
};

const CatalogData& data() {
    static const CatalogData d = [] {
        CatalogData cd;

        auto add = [&](PaperConstruction c) { cd.constructions.emplace(c.dim, std::move(c)); };

        {
            PaperConstruction c;
            c.dim = 19;
            c.ambient = AmbientTag::Leech24;
            c.ambient_dim = 24;
            c.mu = 4;
            c.section_rows = mat_from(&kSection19[0][0], 5, 24);
            c.section_gram = RatMat{{4, 0, 0, -1, -1},
                                    {0, 4, 0, -2, -1},
                                    {0, 0, 4, -1, -2},
                                    {-1, -2, -1, 4, 0},
                                    {-1, -1, -2, 0, 4}};
            c.dual_gram = scaled_int_mat({{21, 9, 9, 12, 12},
                                          {9, 29, 13, 20, 16},
                                          {9, 13, 29, 16, 20},
                                          {12, 20, 16, 32, 16},
                                          {12, 16, 20, 16, 32}}, 60);
            c.beta = make_rat(8, 15);
            c.expected_density = QuadSurd::make(make_rat(ipow(13, 9), ipow(3, 9) * ipow(5, 11)), Rat(65));
            c.expected_decimal = "0.08896";
            c.prior_decimal = "0.08839";
            c.prior_name = "Laminated lattice";
            add(std::move(c));
        }
        {
            PaperConstruction c;
            c.dim = 20;
            c.ambient = AmbientTag::Leech24;
            c.ambient_dim = 24;
            c.mu = 4;
            c.section_rows = mat_from(&kSection20[0][0], 4, 24);
            c.section_gram = RatMat{{4, -1, -1, -1}, {-1, 4, -1, -1}, {-1, -1, 4, -1}, {-1, -1, -1, 4}};
            c.dual_gram = scaled_int_mat({{2, 1, 1, 1}, {1, 2, 1, 1}, {1, 1, 2, 1}, {1, 1, 1, 2}}, 5);
            c.beta = make_rat(2, 5);
            c.expected_density = QuadSurd::make(make_rat(ipow(3, 20), ipow(2, 10) * ipow(5, 11)), Rat(5));
            c.expected_decimal = "0.15593";
            c.prior_decimal = "0.13154";
            c.prior_name = "Construction B*/Antipode";
            add(std::move(c));
        }
        {
            PaperConstruction c;
            c.dim = 21;
            c.ambient = AmbientTag::Leech24;
            c.ambient_dim = 24;
            c.mu = 4;
            c.section_rows = mat_from(&kSection21[0][0], 3, 24);
            c.section_gram = RatMat{{4, -2, -1}, {-2, 4, -1}, {-1, -1, 4}};
            c.dual_gram = scaled_int_mat({{5, 3, 2}, {3, 5, 2}, {2, 2, 4}}, 12);
            c.beta = make_rat(5, 12);
            c.expected_density = QuadSurd::make(make_rat(ipow(43, 10), ipow(2, 41) * ipow(3, 12)), Rat(129));
            c.expected_decimal = "0.21004";
            c.prior_decimal = "0.17678";
            c.prior_name = "Laminated lattice";
            add(std::move(c));
        }
        {
            PaperConstruction c;
            c.dim = 23;
            c.ambient = AmbientTag::Leech24;
            c.ambient_dim = 24;
            c.mu = 4;
            c.section_rows = mat_from(&kSection23[0][0], 1, 24);
            c.section_gram = RatMat{{6}};
            c.dual_gram = scaled_int_mat({{1}}, 6);
            c.beta = make_rat(1, 6);
            c.expected_density = QuadSurd::make(make_rat(ipow(23, 11), ipow(2, 34) * ipow(3, 12)), Rat(23));
            c.expected_decimal = "0.50049";
            c.prior_decimal = "0.50000";
            c.prior_name = "Laminated lattice";
            add(std::move(c));
        }
        {
            PaperConstruction c;
            c.dim = 44;
            c.ambient = AmbientTag::P48pAssumed;
            c.ambient_dim = 48;
            c.mu = 6;
            c.section_gram = RatMat{{6, -2, -1, -1}, {-2, 6, -2, -1}, {-1, -2, 6, -2}, {-1, -1, -2, 6}};
            c.dual_gram = scaled_int_mat({{14, 8, 7, 6}, {8, 16, 9, 7}, {7, 9, 16, 8}, {6, 7, 8, 14}}, 55);
            c.beta = make_rat(16, 55);
            c.expected_density =
                QuadSurd::make(make_rat(ipow(157, 22), ipow(2, 22) * ipow(5, 22) * ipow(11, 23)), Rat(5));
            c.expected_decimal = "509.619";
            c.prior_decimal = "472.799";
            c.prior_name = "Antipode";
            add(std::move(c));
        }
        {
            PaperConstruction c;
            c.dim = 45;
            c.ambient = AmbientTag::P48pAssumed;
            c.ambient_dim = 48;
            c.mu = 6;
            c.section_gram = RatMat{{6, -2, -2}, {-2, 6, -2}, {-2, -2, 6}};
            c.dual_gram = scaled_int_mat({{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}, 8);
            c.beta = make_rat(1, 4);
            c.expected_density = QuadSurd::make(make_rat(ipow(23, 22), ipow(2, 92)), Rat(46));
            c.expected_decimal = "1243.46";
            c.prior_decimal = "974.700";
            c.prior_name = "Antipode";
            add(std::move(c));
        }
        {
            PaperConstruction c;
            c.dim = 47;
            c.ambient = AmbientTag::P48pAssumed;
            c.ambient_dim = 48;
            c.mu = 6;
            c.section_gram = RatMat{{8}};
            c.dual_gram = scaled_int_mat({{1}}, 8);
            c.beta = make_rat(1, 8);
            c.expected_density = QuadSurd::make(make_rat(ipow(47, 23), ipow(2, 118)), Rat(47));
            c.expected_decimal = "5925.98";
            c.prior_decimal = "5788.81";
            c.prior_name = "Antipode";
            add(std::move(c));
        }
        return cd;
    }();
    return d;
}

}  // namespace

const ScaledLattice& leech_generator() {
    static const ScaledLattice l = make_lattice(mat_from(&kLeechBasis[0][0], 24, 24), Int(8));
    return l;
}

const std::vector<int>& catalog_dims() {
    static const std::vector<int> dims{19, 20, 21, 23, 44, 45, 47};
    return dims;
}

PaperConstruction construction(int dim) {
    auto it = data().constructions.find(dim);
    if (it == data().constructions.end())
        throw std::invalid_argument("catalog: no construction in dimension " + std::to_string(dim));
    return it->second;
}

std::vector<Table1Row> table1() {
    std::vector<Table1Row> rows;
    for (int d : catalog_dims()) {
        PaperConstruction c = construction(d);
        rows.push_back({d, c.prior_decimal, c.prior_name, c.expected_decimal});
    }
    return rows;
}

Dim18Target dim18_target() {
    return {QuadSurd::make(make_rat(ipow(5, 9), ipow(2, 8) * ipow(3, 11)), Rat(3)), "0.07460"};
}

}  // namespace antipode

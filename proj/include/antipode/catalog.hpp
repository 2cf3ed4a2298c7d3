#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antipode/antipode.hpp"
#include "antipode/lattice.hpp"
#include "antipode/quadsurd.hpp"

namespace antipode {

enum class AmbientTag { Leech24, P48pAssumed };

// One catalogued construction: ambient, cross-section data, translate bound
// and the certified center density it must reproduce.
struct PaperConstruction {
    int dim = 0;  // packing dimension l
    AmbientTag ambient = AmbientTag::Leech24;
    int ambient_dim = 0;
    Rat mu;
    std::optional<IntMat> section_rows;  // generator rows over sqrt(8), Leech cases only
    RatMat section_gram;                 // K
    RatMat dual_gram;                    // M = K^{-1} as displayed
    Rat beta;
    QuadSurd expected_density;
    std::string expected_decimal;  // rounded as printed
    std::string prior_decimal;
    std::string prior_name;
};

// Leech lattice: 24x24 integer rows over sqrt(8); integral Gram,
// determinant 1, minimal norm 4. Coordinates are fixed by the convention
// described in catalog.cpp.
const ScaledLattice& leech_generator();

const std::vector<int>& catalog_dims();  // {19, 20, 21, 23, 44, 45, 47}
PaperConstruction construction(int dim);  // throws on unknown dimension

struct Table1Row {
    int dim;
    std::string prior_decimal;
    std::string prior_name;
    std::string our_decimal;
};
std::vector<Table1Row> table1();

// Known non-lattice density target in dimension 18 for the search module.
struct Dim18Target {
    QuadSurd density_exact;
    std::string density_decimal;
};
Dim18Target dim18_target();

}  // namespace antipode

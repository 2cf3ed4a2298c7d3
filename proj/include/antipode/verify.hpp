#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "antipode/catalog.hpp"

namespace antipode {

// One row of the reproduction report.
struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    std::vector<int> dims;  // empty: all catalog dimensions
    bool audit = false;     // run the non-overlap audit (Leech cases)
    bool deep = false;      // Leech minimal-norm enumeration and shell count
    EnumOptions enumeration;
    // test hook: adds 1/7 to K[i][j] (and K[j][i]) of one construction
    std::optional<std::tuple<int, int, int>> perturb_section_gram;
};

// Runs the whole-catalog reproduction suite: inverse identities, beta
// values, exact densities and their printed roundings, record strictness,
// Leech membership / saturation / projection duality, and optionally the
// overlap audit and deep enumeration checks.
std::vector<CheckLine> verify_paper(const VerifyOptions& opts);

bool all_pass(const std::vector<CheckLine>& lines);

}  // namespace antipode

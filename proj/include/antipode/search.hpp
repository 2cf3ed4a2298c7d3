#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>

#include "antipode/antipode.hpp"
#include "antipode/catalog.hpp"

namespace antipode {

enum class TranslateMode { BasisPlusOrigin, CliqueSearch };

struct SearchConfig {
    int section_dim = 1;  // 1..6
    std::uint64_t seed = 0;
    long budget = 100;  // random candidates; forced sections come on top
    Rat shell_bound = Rat(6);
    TranslateMode s_target = TranslateMode::BasisPlusOrigin;
    bool dedupe = true;
    bool exhaustive = false;                 // supported for section_dim <= 2
    std::vector<IntMat> forced_sections;     // generator rows over sqrt(8), kept as given
    EnumOptions enumeration;
};

// Key invariant under the integral congruences arising here: determinant,
// sorted diagonal and off-diagonal multiset of the LLL-reduced Gram, and the
// first three shell counts.
std::string gram_canonical_key(const RatMat& gram);

// Chooses a translate set in the projected lattice with Gram m.
//   BasisPlusOrigin: {0, basis rows}, minimized over sign flips and
//   permutations of the basis (k <= 6).
//   CliqueSearch: greedy-plus-exact max clique (size <= 8) over the short
//   vectors of m, maximizing s then minimizing beta. The vertex pool is
//   truncated to the shortest 512 vectors.
// Throws when no admissible set with beta < mu exists.
struct TranslateChoice {
    TranslateSet set;
    Rat beta;
};
TranslateChoice optimize_translates(const RatMat& m, const Rat& mu, TranslateMode mode);

// Saturated k-dimensional cross-sections of the Leech lattice generated by
// vectors from shell(Lambda24, shell_bound); exhaustive over congruence
// classes for k <= 2, seeded-random otherwise. Forced sections are returned
// first, with their given bases when primitive.
struct SectionCandidate {
    ScaledLattice lattice;
    bool forced = false;
};
std::vector<SectionCandidate> enumerate_sections(const SearchConfig& config);

struct SearchEntry {
    int dim = 0;
    RatMat section_gram;
    Rat beta;
    long s = 0;
    QuadSurd density;
    std::string key;
    AntipodeCertificate certificate;
};

struct SearchReport {
    std::uint64_t seed = 0;
    int section_dim = 0;
    TranslateMode s_target = TranslateMode::BasisPlusOrigin;
    Rat shell_bound;
    std::vector<SearchEntry> entries;  // ranked: exact density descending, key ascending
    std::map<int, std::size_t> best_per_dim;
    long candidates_tried = 0;
    long candidates_deduped = 0;
};

SearchReport run_search(const SearchConfig& config);

void write_report(std::ostream& out, const SearchReport& report);

}  // namespace antipode

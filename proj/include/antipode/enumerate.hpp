#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "antipode/linalg.hpp"

namespace antipode {

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(long cap_)
        : std::runtime_error("enumeration cap of " + std::to_string(cap_) + " sign classes exceeded"), cap(cap_) {}
    long cap;
};

struct EnumOptions {
    long cap = 10'000'000;  // sign classes
    int threads = 1;
};

// Exact minimal nonzero norm with a deterministic witness (coordinates over
// the gram's basis, sign-canonical, lexicographically smallest among the
// minimal vectors). Certified by exhaustive branch-and-bound below the
// smallest diagonal of the LLL-reduced Gram.
struct MinNormResult {
    Rat norm;
    std::vector<long> witness;
};
MinNormResult min_norm(const RatMat& gram, const EnumOptions& opts = {});

// All vectors with 0 < norm <= bound, one representative per {v, -v} pair
// (first nonzero coordinate positive), sorted lexicographically.
struct ShellListing {
    Rat norm_bound;
    std::vector<std::vector<long>> vectors;
    std::vector<Rat> norms;

    long count() const { return static_cast<long>(vectors.size()); }
};
ShellListing shell(const RatMat& gram, const Rat& bound, const EnumOptions& opts = {});

// Number of minimal vectors, both signs counted.
long kissing_count(const RatMat& gram, const EnumOptions& opts = {});

// Exact minimum of (x + offset) G (x + offset)^T over integer x.
struct CosetQuery {
    RatMat gram;
    std::vector<Rat> offset;
    Rat norm_bound;  // <= 0: unconstrained minimum search
};
struct CosetMinResult {
    Rat min;
    std::vector<long> witness;
};
CosetMinResult coset_min(const CosetQuery& query, const EnumOptions& opts = {});

// Streaming enumeration of the sign classes with 0 < norm <= bound.
// Coordinates are over the input gram's basis; the norm argument is exact.
// With opts.threads > 1 the visitor is invoked concurrently from several
// threads and must be thread-safe; emission order is unspecified either way,
// so downstream reductions have to be order-independent.
void for_each_shell_vector(const RatMat& gram, const Rat& bound, const EnumOptions& opts,
                           const std::function<void(std::span<const long>, const Rat&)>& visit);

}  // namespace antipode

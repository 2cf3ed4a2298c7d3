#pragma once

#include <optional>
#include <span>
#include <vector>

#include "antipode/matrix.hpp"

namespace antipode {

// Exact determinant. Clears denominators and runs fraction-free (Bareiss)
// elimination over the integers.
Rat det_bareiss(const RatMat& a);

// Exact inverse via Gauss-Jordan. Throws on singular input.
RatMat inverse(const RatMat& a);

// Solves x * a = v. Returns nullopt when inconsistent. When a has full row
// rank the solution is unique.
std::optional<std::vector<Rat>> solve_left(const RatMat& a, std::span<const Rat> v);

int rank_of(const RatMat& a);

// Row-style Hermite Normal Form: transform * a = hermite, transform
// unimodular. Pivots positive, entries above a pivot reduced into
// [0, pivot). Zero rows sink to the bottom.
struct HnfResult {
    IntMat hermite;
    IntMat transform;
    int rank = 0;
};
HnfResult hnf(const IntMat& a);

// Rows spanning {x : x * a = 0} over the integers (a saturated sublattice of Z^rows).
IntMat left_kernel(const IntMat& a);
// Rows y with a * y^T = 0.
IntMat right_kernel(const IntMat& a);

// Exact LLL on a Gram matrix. Returns the reduced Gram together with the
// unimodular transform: reduced = transform * gram * transform^T. Throws on
// non-positive-definite input or delta outside (1/4, 1).
struct LllResult {
    RatMat gram;
    IntMat transform;
};
LllResult lll_reduce(const RatMat& gram, const Rat& delta = make_rat(3, 4));

// Exact LDL^T of a symmetric positive definite matrix: gram = L D L^T with
// L unit lower triangular. Throws on non-PD input.
struct LdlResult {
    RatMat l;
    std::vector<Rat> d;
};
LdlResult ldl(const RatMat& gram);

}  // namespace antipode

#pragma once

#include <iosfwd>
#include <stdexcept>

#include "antipode/linalg.hpp"
#include "antipode/matrix.hpp"

namespace antipode {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Lattice with an irrational global scale: vectors are integer rows divided
// by sqrt(norm_divisor), so all inner products are rational (dot / d).
// The divisor is kept minimal: no prime divides every basis entry while its
// square divides d.
struct ScaledLattice {
    IntMat basis;      // k x n, full row rank
    Int norm_divisor;  // d >= 1

    int rank() const { return basis.rows(); }
    int ambient_dim() const { return basis.cols(); }
};

ScaledLattice make_lattice(IntMat basis, Int norm_divisor);

struct GramLattice {
    RatMat gram;  // symmetric positive definite
};

struct Subspace {
    RatMat span_rows;  // independent rows spanning U in the ambient coordinates

    int dim() const { return span_rows.rows(); }
    int ambient_dim() const { return span_rows.cols(); }
};

RatMat gram_of(const ScaledLattice& l);

// True iff v (an integer coordinate row over the same sqrt(d) scale) is an
// integral combination of the basis rows.
bool is_member(const ScaledLattice& l, std::span<const Int> v);

// Coordinates of a member over the basis rows; nullopt when v is not a member.
std::optional<std::vector<Int>> member_coords(const ScaledLattice& l, std::span<const Int> v);

// Dual lattice of l inside span(l), as Gram data: inverse(gram_of(l)).
GramLattice dual_basis(const ScaledLattice& l);

// Saturation of the sublattice generated by `rows` inside `ambient`:
// basis of ambient ∩ span(rows), with the index of the row lattice inside it.
// Rows must be independent members of the ambient lattice.
struct SaturationResult {
    ScaledLattice lattice;  // HNF-canonical coordinates over the ambient basis
    Int index;
};
SaturationResult saturate_with_index(const ScaledLattice& ambient, const IntMat& rows);
ScaledLattice saturate(const ScaledLattice& ambient, const IntMat& rows);

// Gram matrix of the orthogonal projection of the ambient lattice onto u.
GramLattice project(const ScaledLattice& ambient, const Subspace& u);

Subspace orthogonal_complement(int ambient_dim, const Subspace& u);

// Text formats.
//   lattice n k d   followed by k rows of n integers
//   gram k          followed by k rows of k rationals
// '#' starts a comment anywhere on a line.
ScaledLattice read_lattice(std::istream& in);
void write_lattice(std::ostream& out, const ScaledLattice& l);
RatMat read_gram(std::istream& in);
void write_gram(std::ostream& out, const RatMat& gram);

}  // namespace antipode

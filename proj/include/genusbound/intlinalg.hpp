#pragma once

// Dense exact linear algebra over Z and Q. Everything here is elimination
// based: unimodular column reduction for integer kernels (which are
// automatically saturated), fraction-free determinants, and saturation of
// integer spans via a double kernel.

#include <vector>

#include "genusbound/arith.hpp"

namespace genusbound {

using IntMatrix = std::vector<std::vector<Int>>;  // row-major
using RatMatrix = std::vector<std::vector<Rat>>;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Basis of {x in Z^ncols : m x = 0}. The result spans the full rational
// kernel and is a basis of a saturated sublattice. Each basis vector is
// normalized so its first nonzero entry is positive. m may have zero rows;
// ncols must be passed explicitly for that reason.
std::vector<IntVec> int_kernel(const IntMatrix& m, int ncols);

// Rank over Q of an integer matrix.
int int_rank(const IntMatrix& m, int ncols);

// Scales every row by the lcm of its denominators; the kernel is unchanged.
IntMatrix clear_row_denominators(const RatMatrix& m);

// Basis of span_Q(vecs) ∩ Z^n, a saturated lattice containing the span of
// vecs. Computed as the integer kernel of the integer kernel.
std::vector<IntVec> saturate_span(const std::vector<IntVec>& vecs, int n);

// Exact determinant of a square integer matrix (Bareiss, fraction-free).
Int bareiss_det(IntMatrix m);

// Divides v by the gcd of its entries in place; returns that gcd (0 if v=0).
Int make_primitive(IntVec& v);

}  // namespace genusbound

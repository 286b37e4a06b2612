#pragma once

// Rank-2g integral symplectic lattices. Vectors and bases are stored in
// coordinates of a fixed reference basis A1..Ag, B1..Bg carrying the
// standard form w(Ai,Bj) = delta_ij, w(Ai,Aj) = w(Bi,Bj) = 0. All indices
// in the public API are 1-based, matching the usual notation.

#include <string>
#include <utility>
#include <vector>

#include "genusbound/arith.hpp"
#include "genusbound/intlinalg.hpp"

namespace genusbound {

struct SymplecticVector {
    IntVec coeffs;  // length 2g

    bool operator==(const SymplecticVector&) const = default;
};

SymplecticVector zero_vector(int genus);
SymplecticVector a_unit(int genus, int i);
SymplecticVector b_unit(int genus, int i);

struct SymplecticBasis {
    int genus = 0;
    std::vector<SymplecticVector> vectors;  // A1..Ag then B1..Bg

    static SymplecticBasis identity(int genus);

    const SymplecticVector& a(int i) const { return vectors[i - 1]; }
    const SymplecticVector& b(int i) const { return vectors[genus + i - 1]; }
    SymplecticVector& a(int i) { return vectors[i - 1]; }
    SymplecticVector& b(int i) { return vectors[genus + i - 1]; }

    bool operator==(const SymplecticBasis&) const = default;
};

// The standard form on raw coordinate vectors of even length 2g.
Int standard_form(const IntVec& u, const IntVec& v);

// Evaluates the form; both vectors must have length 2g.
Int form_eval(const SymplecticVector& u, const SymplecticVector& v, int genus);

struct VerifyResult {
    bool ok = true;
    // 1-based positions into the A1..Ag,B1..Bg list of the first pair whose
    // pairing differs from the standard form.
    int row = 0;
    int col = 0;
    Int got = 0;
    Int expected = 0;

    std::string describe(int genus) const;
};

VerifyResult verify_basis(const SymplecticBasis& basis);

// |det| of the 2g x 2g coordinate matrix, computed by fraction-free
// elimination, independent of the pairing table.
Int basis_det_abs(const SymplecticBasis& basis);

// Ai' = Ai - r Ak, Aj' = Aj - s Ak, Bk' = Bk + r Bi + s Bj; everything else
// unchanged. Requires i, j, k pairwise distinct in 1..g (hence g >= 3).
SymplecticBasis a_shear_change(const SymplecticBasis& basis, int i, int j, int k,
                               const Int& r, const Int& s);

// For coprime (a_m, a_n), replaces the pairs at slots m and n by
//   Am' = a_m Am + a_n An,  Bm' = p Bm + q Bn,
//   An' = p An - q Am,      Bn' = a_m Bn - a_n Bm,
// where (p, q) = completion_bezout(a_m, a_n). The new Am' is the requested
// combination and the result is again symplectic.
SymplecticBasis pair_completion(const SymplecticBasis& basis, int m, int n,
                                const Int& a_m, const Int& a_n);

// (Aj, Bj) -> (-Aj, -Bj).
SymplecticBasis flip_pair_sign(const SymplecticBasis& basis, int j);

// Exchanges the pairs at slots i and j.
SymplecticBasis swap_pairs(const SymplecticBasis& basis, int i, int j);

// Canonical Bezout pair for coprime (a_m, a_n): p*a_m + q*a_n = 1 with
// p the representative of a_m^{-1} mod |a_n| in [0, |a_n|) when a_n != 0,
// and (p, q) = (a_m, 0) when a_n == 0.
std::pair<Int, Int> completion_bezout(const Int& a_m, const Int& a_n);

}  // namespace genusbound

#pragma once

// Constructive completion of primitive vectors to symplectic bases by gcd
// descent, and the embedding invariant l: the largest number of A-vectors
// of some symplectic basis of the surface killed rationally by inclusion.
// Three routes to l live in this project: the closed form here, the
// constructive witness here, and the bounded search in the oracle module.

#include <optional>
#include <variant>
#include <vector>

#include "genusbound/intlinalg.hpp"
#include "genusbound/symplattice.hpp"

namespace genusbound {

// A vector sum a_1 A_1 + ... + a_g A_g in the A-span of the reference basis.
struct PrimitiveAVector {
    int genus = 0;
    IntVec coeffs;  // length g

    bool operator==(const PrimitiveAVector&) const = default;
};

// Throws InputError unless coeffs has length g, is not identically zero, and
// the gcd of the entries is 1.
void validate_primitive(const PrimitiveAVector& v);

// The matrix of i_*: H1(S;Q) -> H1(M;Q) in the reference symplectic basis of
// the source. Rows are indexed by a basis of H1(M;Q), columns by
// A1..Ag,B1..Bg.
struct EmbeddingMap {
    int genus = 0;
    int ambient_b1 = 0;
    RatMatrix matrix;  // ambient_b1 rows, 2g columns

    bool operator==(const EmbeddingMap&) const = default;
};

void validate_embedding(const EmbeddingMap& e);

// Elementary basis-change records. Replaying them from the identity basis
// must reproduce the recorded final basis exactly.
struct AShearStep {
    int i, j, k;
    Int r, s;
    bool operator==(const AShearStep&) const = default;
};
struct PairCompletionStep {
    int m, n;
    Int a_m, a_n;
    bool operator==(const PairCompletionStep&) const = default;
};
struct SignFlipStep {
    int j;
    bool operator==(const SignFlipStep&) const = default;
};
struct SwapStep {
    int i, j;
    bool operator==(const SwapStep&) const = default;
};
using BasisStep = std::variant<AShearStep, PairCompletionStep, SignFlipStep, SwapStep>;

SymplecticBasis apply_step(const SymplecticBasis& basis, const BasisStep& step);

struct ReductionTrace {
    std::vector<BasisStep> steps;
    SymplecticBasis final_basis;
    int slot = 0;  // 1-based A-slot holding the completed vector
};

// Completes v to a symplectic basis containing v verbatim in its A-part.
// Descent: with N = number of nonzero coefficients, N = 1 sign-normalizes in
// place, N = 2 finishes by pair completion, and N >= 3 shears the smallest
// remaining nonzero coefficient into [0, min-pair-gcd) so that the pair
// (N, min pairwise gcd) strictly decreases lexicographically every round.
ReductionTrace complete_primitive(const PrimitiveAVector& v);

// Minimum of gcd(|a|, |b|) over unordered pairs of nonzero entries of
// coeffs; requires at least two nonzero entries.
Int min_pair_gcd(const IntVec& coeffs);

// l via exact linear algebra: dim ker(i_*) minus half the rank of the
// symplectic form restricted to the kernel (the dimension of a maximal
// isotropic subspace of the kernel).
int l_invariant(const EmbeddingMap& e);

struct ConstructiveL {
    int value = 0;
    SymplecticBasis witness;  // first `value` A-vectors lie in ker(i_*)
};

// Constructive route: build a saturated integral basis of a maximal
// isotropic sublattice of ker(i_*), then complete it pair by pair on
// successive symplectic complements. The returned witness is verified
// symplectic and its leading A-vectors verified to be killed by e.matrix;
// the value is therefore a certified lower bound for l (and agrees with
// l_invariant by construction).
ConstructiveL l_lower_bound_constructive(const EmbeddingMap& e);

// max(0, g - b1): a genus-g surface in a manifold with first Betti number
// b1 always has l >= g - b1.
int l_bound_from_betti(int genus, int b1);

}  // namespace genusbound

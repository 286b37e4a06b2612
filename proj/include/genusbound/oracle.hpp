#pragma once

// Independent brute-force verifiers: seeded random walks through the
// integral symplectic group, a bounded breadth-first search that bounds the
// embedding invariant l from below, and exact replay of reduction traces.
// These are test instruments; they certify the constructive algorithms on
// small cases and never replace them.

#include <cstdint>
#include <variant>
#include <vector>

#include "genusbound/reduction.hpp"
#include "genusbound/symplattice.hpp"

namespace genusbound {

// Elementary moves. Every letter maps symplectic bases to symplectic bases;
// the restricted set used by the search is closed under inversion so the
// reachable set is a ball in the group.
struct TransvectLetter {  // Ai -= r Ak, Bk += r Bi
    int i, k;
    Int r;
};
struct ShearALetter {  // Bk += c Ak
    int k;
    Int c;
};
struct ShearBLetter {  // Ak += c Bk
    int k;
    Int c;
};
struct ABSwapLetter {  // (Ak, Bk) -> (Bk, -Ak); inverse direction if flagged
    int k;
    bool inverse;
};
struct PairSwapLetter {
    int i, j;
};
struct AShearLetter {
    AShearStep step;
};
struct PairCompletionLetter {
    PairCompletionStep step;
};

using MoveLetter = std::variant<TransvectLetter, ShearALetter, ShearBLetter, ABSwapLetter,
                                PairSwapLetter, AShearLetter, PairCompletionLetter>;

SymplecticBasis apply_letter(const SymplecticBasis& basis, const MoveLetter& letter);

struct GeneratorWord {
    int genus = 0;
    std::uint64_t seed = 0;
    std::vector<MoveLetter> letters;
};

// Deterministic in (genus, steps, seed).
GeneratorWord random_word(int genus, int steps, std::uint64_t seed);

// Applies the word to the identity basis; the result must pass verify_basis
// (checked, InternalError otherwise).
SymplecticBasis apply_word(const GeneratorWord& word);

SymplecticBasis random_symplectic_basis(int genus, int steps, std::uint64_t seed);

struct ExhaustiveLResult {
    int value = 0;        // best leading-A kernel count seen within the budget
    bool stabilized = false;  // no improvement over the last two budget levels
    int levels = 0;
    std::size_t states = 0;

    bool operator==(const ExhaustiveLResult&) const = default;
};

// Breadth-first search over bases reachable from the identity by at most
// move_budget elementary moves, maximizing the number of leading A-vectors
// killed by the embedding. The value is always a certified lower bound for
// l; only stabilized results should be used in equivalence assertions.
// state_cap bounds the search; hitting it yields a partial (unstabilized)
// verdict rather than a wrong one.
ExhaustiveLResult exhaustive_l(const EmbeddingMap& e, int move_budget,
                               std::size_t state_cap = 2'000'000);

// Replays trace.steps from the identity basis and compares against
// trace.final_basis; any mismatch or invalid step parameter raises
// InputError ("corrupt trace"). Returns the replayed basis.
SymplecticBasis replay(const ReductionTrace& trace);

}  // namespace genusbound

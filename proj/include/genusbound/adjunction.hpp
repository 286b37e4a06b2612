#pragma once

// Decision procedures for the adjunction inequalities. Every rule is turned
// into the smallest genus NOT excluded by it: an inequality LHS <= 2g - 2
// becomes the bound g >= ceil((LHS + 2) / 2). Hypothesis failures are
// reported as structured verdicts, never as silent skips; only malformed
// case data (parity, chamber, dimension mismatches) raises errors.
//
// Rule ids:
//   th1              basic classes; correction (2 - min(b1,1)) d(s)
//   th2              insertions of degree d(b) <= l(S); correction 2 d(b)
//   th2_high_degree  insertions of degree d(b) > l(S); correction d(b)
//   th3              gate |e| + n >= 2 b1; correction 2 d(b), no l needed
//   th4              basic classes, gate |e| + 3n >= 2 b1;
//                    correction 2 d(s) - 2 b1
//   key              degree cap d(b) <= g - b1 under the th3 gate
// For b2+ = 1 every |e| above is read as -e and the invariant is evaluated
// in the chamber containing PD[S]; the gate -e + n >= 0 is then required
// where the rules demand it.

#include <optional>
#include <string>
#include <vector>

#include "genusbound/swtopology.hpp"

namespace genusbound {

struct AdjunctionCase {
    ManifoldData manifold;
    SurfaceData surface;
    SpinCData spinc;
    std::optional<Int> d_s;
    InsertionData insertion;

    bool operator==(const AdjunctionCase&) const = default;
};

enum class TheoremId { th1, th2, th2_high_degree, th3, th4, key };

const char* theorem_id_name(TheoremId id);

// Stable failed-hypothesis labels.
namespace hyp {
inline constexpr const char* self_int_nonneg = "self-intersection nonnegative";
inline constexpr const char* non_torsion = "non-torsion class";
inline constexpr const char* sw_nonvanishing = "sw nonvanishing";
inline constexpr const char* basic_class = "basic class";
inline constexpr const char* negative_formal_dim = "negative formal dimension";
inline constexpr const char* formal_dim_unknown = "formal dimension unknown";
inline constexpr const char* chamber_positivity = "chamber positivity";
inline constexpr const char* betti_gate = "betti gate";
}  // namespace hyp

struct TheoremVerdict {
    TheoremId id = TheoremId::th1;
    bool applicable = false;
    std::vector<std::string> failed_hypotheses;
    std::optional<Int> genus_lower_bound;  // present iff applicable
    std::optional<Int> degree_cap;         // only produced by the key rule

    bool operator==(const TheoremVerdict&) const = default;
};

struct BoundReport {
    std::vector<TheoremVerdict> verdicts;  // th1, th2[/hd], th3, th4, key
    std::optional<Int> best_bound;
    bool normalization_applied = false;
    std::optional<int> l_sigma;
    std::string l_source;  // "given", "embedding" or "betti_floor"
};

// Smallest integer g with 2g - 2 >= lhs.
Int genus_floor(const Int& lhs);

// Parity, chamber and cross-consistency validation; throws InputError.
void validate_case(const AdjunctionCase& c);

// Replaces [S] by -[S] when the pairing is positive; only legal for
// b2+ > 1, since for b2+ = 1 the chamber is pinned to PD[S].
AdjunctionCase normalize_orientation(const AdjunctionCase& c);

TheoremVerdict bound_th1(const AdjunctionCase& c);
TheoremVerdict bound_th2(const AdjunctionCase& c, int l_sigma);
TheoremVerdict bound_th3(const AdjunctionCase& c);
TheoremVerdict bound_th4(const AdjunctionCase& c);
TheoremVerdict max_insertion_degree(const AdjunctionCase& c);

// Runs every rule (over both orientations of [S] when b2+ > 1, keeping the
// stronger verdict per rule) and aggregates the best applicable bound.
// l_sigma is taken from the argument if given, else computed from the
// embedding matrix if present, else floored by max(0, g - b1).
BoundReport best_bound(const AdjunctionCase& c, std::optional<int> l_sigma = std::nullopt);

}  // namespace genusbound

#pragma once

// Integer bookkeeping for the ambient 4-manifold, Spin^c structures,
// insertion classes, chambers, and the blow-up transform. Nothing here ever
// computes a gauge-theoretic invariant; nonvanishing is an input hypothesis.

#include <optional>
#include <string>

#include "genusbound/arith.hpp"
#include "genusbound/reduction.hpp"

namespace genusbound {

enum class Chamber { pd_sigma, not_applicable };

const char* chamber_name(Chamber c);

struct ManifoldData {
    long b1 = 0;
    long b2_plus = 1;
    std::optional<Int> chi;  // Euler characteristic
    std::optional<Int> tau;  // signature

    bool operator==(const ManifoldData&) const = default;
};

struct SpinCData {
    std::string name;
    std::optional<Int> c1_square;
    std::optional<Int> pairing_e;  // <[S], c1(s)>
    bool sw_nonvanishing = false;
    Chamber chamber = Chamber::not_applicable;

    bool operator==(const SpinCData&) const = default;
};

struct SurfaceData {
    int genus = 1;
    Int self_int = 0;  // n = [S].[S]
    bool non_torsion = false;
    std::optional<EmbeddingMap> embedding;

    bool operator==(const SurfaceData&) const = default;
};

// Degrees of the insertion a . i_*(b) with a in A(M) and b in A(S):
// H1 classes have degree one and powers of U degree two, so
// d(b) = 2 u_power + surface_one_dim_count.
struct InsertionData {
    long u_power = 0;
    long surface_one_dim_count = 0;
    long ambient_degree = 0;

    Int degree_b() const { return Int(2) * u_power + surface_one_dim_count; }

    bool operator==(const InsertionData&) const = default;
};

struct BlowUpSpec {
    long r = 0;  // number of exceptional spheres

    bool operator==(const BlowUpSpec&) const = default;
};

void validate_manifold(const ManifoldData& m);
void validate_blowup(const BlowUpSpec& spec);
void validate_insertion(const InsertionData& ins);

// d(s) = (c1(s)^2 - (2 chi + 3 tau)) / 4; the numerator must be divisible
// by 4, otherwise the Spin^c data is inconsistent.
Int d_invariant(const Int& c1_square, const Int& chi, const Int& tau);

// |e| + n must be even for any Spin^c pairing against a closed surface.
bool wu_parity_check(const Int& e, const Int& n);

// c1^2 = tau mod 8 is expected of a characteristic element; violations are
// reported as a warning, not an error.
std::optional<std::string> characteristic_warning(const SpinCData& sp,
                                                  const ManifoldData& m);

struct BlowUpResult {
    ManifoldData manifold;
    SurfaceData surface;
    SpinCData spinc;
    std::optional<Int> d;  // d(s) after the transform, when known

    bool operator==(const BlowUpResult&) const = default;
};

// Connected sum with r reversed-orientation projective planes, the surface
// replaced by its proper transform:
//   n' = n - r, e' = e - 3r, c1^2' = c1^2 - 9r, chi' = chi + r,
//   tau' = tau - r, d' = d - 2r; b1, b2+, genus, chamber unchanged.
BlowUpResult blow_up(const ManifoldData& m, const SurfaceData& s, const SpinCData& sp,
                     const std::optional<Int>& d, const BlowUpSpec& spec);

// Propagates a nonvanishing hypothesis through a blow-up: the transformed
// Spin^c record keeps the flag. Calling this on a vanishing record is a
// hypothesis violation.
SpinCData sw_blowup_transfer(const SpinCData& sp, const BlowUpSpec& spec);

}  // namespace genusbound

#pragma once

// Exact arithmetic layer: arbitrary-precision integers and rationals (GMP)
// plus the handful of number-theoretic helpers the lattice algorithms need.
// No floating point enters the library anywhere.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace genusbound {

using Int = mpz_class;
using Rat = mpq_class;

// Bad user-facing data: dimension mismatches, malformed numbers, violated
// preconditions. The CLI maps this to exit code 2.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A stated hypothesis flag does not hold (e.g. transferring a vanishing
// invariant through a blow-up).
struct HypothesisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internally produced value failed a module invariant; always a bug.
// The CLI maps this to exit code 3.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

inline Int abs_int(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// g = gcd(a, b) >= 0 together with (x, y) solving a*x + b*y = g.
struct Bezout {
    Int g, x, y;
};

inline Bezout ext_gcd(const Int& a, const Int& b) {
    Bezout r;
    mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(),
               a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Floor division and the remainder in [0, |b|); b must be nonzero.
inline Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw InputError("floor_div: division by zero");
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), abs_int(b).get_mpz_t());
    if (b < 0) q = -q;
    return q;
}

inline Int floor_mod(const Int& a, const Int& b) {
    if (b == 0) throw InputError("floor_mod: division by zero");
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), abs_int(b).get_mpz_t());
    return r;
}

// Parses a plain integer ("-12") or a fraction ("3/4", "-7/2"). Rejects
// anything else, in particular decimal points and exponents.
Rat parse_rational(const std::string& text);

// Canonical form: "p" for integers, "p/q" with q > 1 otherwise.
std::string format_rational(const Rat& value);

// Parses a plain decimal integer string.
Int parse_integer(const std::string& text);

}  // namespace genusbound

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace bo {

using Int = mpz_class;

// Exact rational coefficients. mpq_class keeps values in lowest terms with a
// positive denominator provided construction goes through the helpers below;
// arithmetic on canonical values stays canonical.
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

// Parses "a" or "a/b" with arbitrary-precision integers.
Rational parse_rational(const std::string& text);

// Canonical "a" or "a/b" rendering.
std::string to_string(const Rational& r);

// r^e for integer e of either sign; r must be nonzero when e < 0.
Rational rational_pow(const Rational& r, long e);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace bo

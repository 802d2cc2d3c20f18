#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace spacings {

// Exact arithmetic carriers. mpq_class keeps values in lowest terms with a
// positive denominator, which is exactly the canonical-form invariant the
// exact formulas rely on; every operation below is closed and rounding-free.
using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned long n);

// C(n, k) for 0 <= k <= n, 0 for k outside that range.
BigInt binomial(unsigned long n, long k);

// base^e for integer e (negative e inverts; base must be nonzero then).
Rational pow_rational(const Rational& base, long e);

BigInt pow_bigint(const BigInt& base, unsigned long e);

// Serializes as "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Accepts "p", "p/q", and plain decimal strings like "0.125" or "-3.5"
// (converted exactly). Throws std::invalid_argument on anything else.
Rational parse_rational(const std::string& s);

// Decimal rendering with the given number of significant digits.
std::string to_decimal_string(const Rational& q, int digits);

}  // namespace spacings

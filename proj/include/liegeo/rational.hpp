#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace liegeo {

/// Exact rational number. GMP keeps every value in canonical form
/// (gcd(num, den) = 1, den > 0) after each arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// num/den, canonicalized. Throws std::domain_error when den == 0.
Rational frac(long num, long den);

/// Parses "p/q", "-p/q" or an integer string. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q" or "p" when the denominator is 1.
std::string to_string(const Rational& value);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace liegeo

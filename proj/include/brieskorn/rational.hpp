#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace brieskorn {

/// Exact rational number, always canonical (lowest terms, positive
/// denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n" or "n/d" with an optional leading sign. Throws ParseError.
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

/// gcd of numerators over lcm of denominators; positive, or zero when both
/// arguments are zero.
Rational rational_gcd(const Rational& a, const Rational& b);

}  // namespace brieskorn

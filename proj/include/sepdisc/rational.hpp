#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sepdisc {

// Exact rational scalar. GMP keeps values canonical (gcd 1, denominator > 0)
// as long as every entry point canonicalizes; parse_rational and rat() do.
// No floating point is used in any predicate.
using Rational = mpq_class;

Rational rat(long n);
Rational rat(long num, long den);

// Text form "p" or "p/q" with an optional leading '-'. q must be a positive
// integer. Throws ValidationError on anything else.
Rational parse_rational(std::string_view text);

// Canonical text form, bit-exact round trip with parse_rational.
std::string to_string(const Rational& r);

}  // namespace sepdisc

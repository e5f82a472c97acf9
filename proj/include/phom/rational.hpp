#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace phom {

/// Exact arbitrary-precision rational; GMP keeps it canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// Accepts `p/q`, integers and plain decimals (`0.05` is exactly 1/20).
Rational parse_rational(std::string_view text);

/// `p/q`, or just `p` when the denominator is one.
std::string to_string(const Rational& value);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal(const Rational& value, int significant_digits = 12);

inline bool is_probability(const Rational& p) { return p >= 0 && p <= 1; }

}  // namespace phom

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace minscaffold {

/// Exact rational used for edge weights, filtration thresholds and
/// scaffold weights. Equality is exact; nothing here is epsilon-based.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses a decimal literal ("3", "-0.25", "1.5e-3", "+2.") into an exact
/// rational. Throws std::invalid_argument on anything else.
Rational parse_decimal(std::string_view text);

/// Decimal rendering. Terminating fractions with at most `max_fraction_digits`
/// digits are printed exactly; anything else is rounded half-away-from-zero.
std::string to_decimal_string(const Rational& value, int max_fraction_digits = 12);

/// "num/den" in lowest terms ("3" when the denominator is 1).
std::string to_fraction_string(const Rational& value);

double to_double(const Rational& value);

/// Exact value of `value` rounded to the nearest multiple of 10^-digits.
Rational quantize_decimal(double value, int digits);

}  // namespace minscaffold

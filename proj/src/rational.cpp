#include "minscaffold/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace minscaffold {

namespace {

BigInt pow10(unsigned exponent) {
  BigInt result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= 10;
  return result;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_decimal(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  auto fail = [&]() -> Rational {
    throw std::invalid_argument("not a decimal number: '" + std::string(original) + "'");
  };
  if (text.empty()) return fail();

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  BigInt mantissa = 0;
  long exponent = 0;
  std::size_t digits = 0;
  bool seen_point = false;
  std::size_t i = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      mantissa = mantissa * 10 + (c - '0');
      ++digits;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (digits == 0) return fail();

  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') return fail();
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    if (i == text.size()) return fail();
    long e = 0;
    for (; i < text.size(); ++i) {
      const char c = text[i];
      if (c < '0' || c > '9') return fail();
      e = e * 10 + (c - '0');
      if (e > 4000) return fail();
    }
    exponent += exp_negative ? -e : e;
  }

  Rational value = exponent >= 0 ? Rational(mantissa * pow10(static_cast<unsigned>(exponent)))
                                 : Rational(mantissa, pow10(static_cast<unsigned>(-exponent)));
  return negative ? Rational(-value) : value;
}

std::string to_decimal_string(const Rational& value, int max_fraction_digits) {
  const bool negative = value < 0;
  const Rational magnitude = negative ? Rational(-value) : value;
  const BigInt num = boost::multiprecision::numerator(magnitude);
  const BigInt den = boost::multiprecision::denominator(magnitude);

  // Smallest k <= max with den | 10^k, if any.
  int exact_digits = -1;
  {
    BigInt scale = 1;
    for (int k = 0; k <= max_fraction_digits; ++k) {
      if (scale % den == 0) {
        exact_digits = k;
        break;
      }
      scale *= 10;
    }
  }
  const int digits = exact_digits >= 0 ? exact_digits : max_fraction_digits;
  const BigInt scale = pow10(static_cast<unsigned>(digits));
  BigInt scaled = (num * scale * 2 + den) / (den * 2);  // round half up on magnitude

  std::string text = scaled.str();
  if (digits > 0) {
    if (text.size() <= static_cast<std::size_t>(digits)) {
      text.insert(0, static_cast<std::size_t>(digits) + 1 - text.size(), '0');
    }
    text.insert(text.size() - static_cast<std::size_t>(digits), ".");
    if (exact_digits < 0) {
      while (text.back() == '0') text.pop_back();
      if (text.back() == '.') text.pop_back();
    }
  }
  if (negative && scaled != 0) text.insert(0, "-");
  return text;
}

std::string to_fraction_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational quantize_decimal(double value, int digits) {
  if (!std::isfinite(value)) throw std::invalid_argument("cannot quantize a non-finite value");
  const double scaled = std::round(value * std::pow(10.0, digits));
  return Rational(BigInt(static_cast<long long>(scaled)), pow10(static_cast<unsigned>(digits)));
}

}  // namespace minscaffold

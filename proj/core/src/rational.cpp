#include "hedonic/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace hedonic {

Rational parse_rational(const std::string& text) {
  auto bad = [&]() {
    return std::invalid_argument("not a rational literal: " + text);
  };
  if (text.empty()) throw bad();
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw bad();
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

std::string format_rational(const Rational& value) {
  const BigInt& num = boost::multiprecision::numerator(value);
  const BigInt& den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational pow_rational(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational factor = base;
  unsigned e = exponent;
  while (e > 0) {
    if (e & 1u) result *= factor;
    factor *= factor;
    e >>= 1u;
  }
  return result;
}

BigInt floor_rational(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

BigInt ceil_rational(const Rational& value) {
  return -floor_rational(-value);
}

double log_bigint(const BigInt& value) {
  if (value <= 0) throw std::domain_error("log of non-positive integer");
  unsigned bits = boost::multiprecision::msb(value);
  if (bits <= 1000) {
    return std::log(value.convert_to<double>());
  }
  unsigned shift = bits - 52;
  BigInt top = value >> shift;
  return std::log(top.convert_to<double>()) + shift * std::log(2.0);
}

double rational_to_double(const Rational& value) {
  if (value == 0) return 0.0;
  bool negative = value < 0;
  Rational mag = negative ? Rational(-value) : value;
  double lg = log_bigint(boost::multiprecision::numerator(mag)) -
              log_bigint(boost::multiprecision::denominator(mag));
  double out = std::exp(lg);
  return negative ? -out : out;
}

double nth_root_double(const Rational& value, int n) {
  if (n <= 0) throw std::domain_error("nth_root_double: n must be positive");
  if (value == 0) return 0.0;
  if (value < 0) throw std::domain_error("nth_root_double: negative value");
  double lg = log_bigint(boost::multiprecision::numerator(value)) -
              log_bigint(boost::multiprecision::denominator(value));
  return std::exp(lg / n);
}

}  // namespace hedonic

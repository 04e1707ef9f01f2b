#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hedonic {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or a plain integer literal. Throws std::invalid_argument on
// garbage or a zero denominator.
Rational parse_rational(const std::string& text);

// Lowest terms, positive denominator. Integers render without the "/1".
std::string format_rational(const Rational& value);

Rational pow_rational(const Rational& base, unsigned exponent);

// floor/ceil to BigInt.
BigInt floor_rational(const Rational& value);
BigInt ceil_rational(const Rational& value);

// Natural log of a positive big integer, usable far beyond double range.
double log_bigint(const BigInt& value);

// Numeric value of a rational for display purposes.
double rational_to_double(const Rational& value);

// value^(1/n) as a double, safe for values whose magnitude overflows double.
double nth_root_double(const Rational& value, int n);

}  // namespace hedonic

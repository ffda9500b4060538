#pragma once

#include <compare>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace panoptigon {

// Unbounded exact arithmetic.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::strong_ordering compare(const Integer& a, const Integer& b) {
  if (a < b) return std::strong_ordering::less;
  if (b < a) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

/// Non-negative gcd; gcd(0, 0) = 0.
Integer gcd(const Integer& a, const Integer& b);

struct Bezout {
  Integer g;
  Integer p;
  Integer q;
};

/// p*a + q*b = g with g = gcd(a, b) >= 0.
Bezout extended_gcd(const Integer& a, const Integer& b);

Integer floor_div(const Integer& num, const Integer& den);
Integer ceil_div(const Integer& num, const Integer& den);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);
bool is_integral(const Rational& r);

std::string to_string(const Integer& v);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& r);

/// Accepts "p" or "p/q" with optional sign; throws std::invalid_argument.
Rational parse_rational(const std::string& text);
Integer parse_integer(const std::string& text);

}  // namespace panoptigon

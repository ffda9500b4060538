#include "panoptigon/integer.hpp"

#include <stdexcept>

namespace panoptigon {

Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

Bezout extended_gcd(const Integer& a, const Integer& b) {
  Integer r0 = a, r1 = b;
  Integer s0 = 1, s1 = 0;
  Integer t0 = 0, t1 = 1;
  while (r1 != 0) {
    Integer q = r0 / r1;
    Integer tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 < 0) return {-r0, -s0, -t0};
  return {r0, s0, t0};
}

Integer floor_div(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("division by zero");
  Integer q = num / den;
  Integer r = num - q * den;
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return q;
}

Integer ceil_div(const Integer& num, const Integer& den) {
  return -floor_div(-num, den);
}

Integer floor(const Rational& r) {
  return floor_div(numerator(r), denominator(r));
}

Integer ceil(const Rational& r) {
  return ceil_div(numerator(r), denominator(r));
}

bool is_integral(const Rational& r) { return denominator(r) == 1; }

std::string to_string(const Integer& v) { return v.str(); }

std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Integer parse_integer(const std::string& text) {
  std::size_t start = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) start = 1;
  if (start == text.size()) throw std::invalid_argument("bad integer '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("bad integer '" + text + "'");
    }
  }
  Integer v(text[0] == '+' ? text.substr(1) : text);
  return v;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rational(num, den);
}

}  // namespace panoptigon

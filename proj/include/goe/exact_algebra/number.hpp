#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <charconv>
#include <string>
#include <string_view>

#include "goe/errors.hpp"

namespace goe {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Integer abs_value(const Integer& z) { return z < 0 ? Integer(-z) : z; }
inline Rational abs_value(const Rational& q) { return q < 0 ? Rational(-q) : q; }

inline int sign_of(const Integer& z) { return z.sign(); }
inline int sign_of(const Rational& q) { return q.sign(); }

inline Integer gcd_of(Integer a, Integer b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Floor division, rounding toward negative infinity (C++ `/` truncates).
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
  return q;
}

inline Integer floor_of(const Rational& q) {
  return floor_div(numerator_of(q), denominator_of(q));
}

/// Representative of q modulo 1 in [0, 1).
inline Rational frac_of(const Rational& q) { return q - Rational(floor_of(q)); }

inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

inline std::string to_string(const Integer& z) { return z.str(); }

inline std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator_of(q).str();
  return numerator_of(q).str() + "/" + denominator_of(q).str();
}

inline Integer parse_integer(std::string_view text) {
  std::string_view t = text;
  if (!t.empty() && (t.front() == '+' || t.front() == '-')) t.remove_prefix(1);
  if (t.empty()) throw ParseError("expected an integer, got '" + std::string(text) + "'");
  for (char ch : t) {
    if (ch < '0' || ch > '9') throw ParseError("expected an integer, got '" + std::string(text) + "'");
  }
  std::string s(text);
  if (s.front() == '+') s.erase(0, 1);
  return Integer(s);
}

/// Parses "p", "p/q" or "-p/q". A zero denominator is a parse error.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

inline long double to_long_double(const Rational& q) {
  return numerator_of(q).convert_to<long double>() / denominator_of(q).convert_to<long double>();
}

inline long double to_long_double(const Integer& z) { return z.convert_to<long double>(); }

}  // namespace goe

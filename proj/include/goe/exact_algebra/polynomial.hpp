#pragma once

/**
 * Dense univariate polynomials over an exact coefficient ring.
 *
 * Coefficients are stored in ascending degree order and kept normalized:
 * the last stored coefficient is nonzero, and the zero polynomial has no
 * coefficients at all (degree -1). `Polynomial<Integer>` is the integer
 * polynomial type used for characteristic and cyclotomic polynomials;
 * `Polynomial<Rational>` carries the Euclidean algorithm.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "goe/errors.hpp"
#include "goe/exact_algebra/number.hpp"

namespace goe {

template <class T>
class Polynomial {
 public:
  using coefficient_type = T;

  Polynomial() = default;
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { normalize(); }
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Polynomial constant(T value) { return Polynomial(std::vector<T>{std::move(value)}); }

  static Polynomial monomial(T value, int degree) {
    std::vector<T> c(static_cast<std::size_t>(degree) + 1, T(0));
    c.back() = std::move(value);
    return Polynomial(std::move(c));
  }

  static Polynomial x() { return monomial(T(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  /// Coefficient of x^i; zero beyond the stored range.
  T operator[](std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }

  const T& leading() const {
    if (c_.empty()) throw PreconditionError("leading coefficient of the zero polynomial");
    return c_.back();
  }

  const std::vector<T>& coefficients() const { return c_; }

  T operator()(const T& at) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  /// Horner evaluation in another arithmetic (long double, complex, matrices).
  template <class U, class Convert>
  U evaluate(const U& at, const U& one, Convert convert) const {
    U acc = one * convert(T(0));
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + one * convert(*it);
    return acc;
  }

  Polynomial operator-() const {
    std::vector<T> c(c_);
    for (auto& v : c) v = -v;
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const T& s, const Polynomial& p) {
    std::vector<T> c(p.c_);
    for (auto& v : c) v *= s;
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<T> c_;
};

using IntegerPolynomial = Polynomial<Integer>;
using RationalPolynomial = Polynomial<Rational>;

template <class T>
Polynomial<T> derivative(const Polynomial<T>& p) {
  if (p.degree() < 1) return {};
  std::vector<T> c(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) c[i - 1] = T(i) * p[i];
  return Polynomial<T>(std::move(c));
}

template <class T>
Polynomial<T> power(const Polynomial<T>& p, unsigned e) {
  Polynomial<T> result = Polynomial<T>::constant(T(1));
  for (unsigned i = 0; i < e; ++i) result *= p;
  return result;
}

/// x^deg p * p(1/x): coefficients in reverse order.
template <class T>
Polynomial<T> reversal(const Polynomial<T>& p) {
  std::vector<T> c(p.coefficients().rbegin(), p.coefficients().rend());
  return Polynomial<T>(std::move(c));
}

/// p(q(x)).
template <class T>
Polynomial<T> compose(const Polynomial<T>& p, const Polynomial<T>& q) {
  Polynomial<T> acc;
  for (int i = p.degree(); i >= 0; --i) acc = acc * q + Polynomial<T>::constant(p[i]);
  return acc;
}

inline RationalPolynomial to_rational(const IntegerPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return RationalPolynomial(std::move(c));
}

/// gcd of the coefficients, with the sign of the leading coefficient.
inline Integer content(const IntegerPolynomial& p) {
  Integer g = 0;
  for (const auto& v : p.coefficients()) g = gcd_of(g, v);
  if (!p.is_zero() && p.leading() < 0) g = -g;
  return g;
}

/// Primitive part with positive leading coefficient.
inline IntegerPolynomial primitive_part(const IntegerPolynomial& p) {
  if (p.is_zero()) return p;
  const Integer g = content(p);
  std::vector<Integer> c(p.coefficients());
  for (auto& v : c) v /= g;
  return IntegerPolynomial(std::move(c));
}

/// Clears denominators and returns the primitive integer associate.
inline IntegerPolynomial primitive_part(const RationalPolynomial& p) {
  if (p.is_zero()) return {};
  Integer l = 1;
  for (const auto& v : p.coefficients()) {
    const Integer d = denominator_of(v);
    l = l / gcd_of(l, d) * d;
  }
  std::vector<Integer> c;
  for (const auto& v : p.coefficients()) c.push_back(numerator_of(v * Rational(l)));
  return primitive_part(IntegerPolynomial(std::move(c)));
}

/// Division with remainder over a field.
template <class T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<T>(), a};
  std::vector<T> rem(a.coefficients());
  std::vector<T> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, T(0));
  const T& lead = b.leading();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    T factor = rem[i] / lead;
    quo[i - db] = factor;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= factor * b[j];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<T>(std::move(quo)), Polynomial<T>(std::move(rem))};
}

template <class T>
Polynomial<T> remainder(const Polynomial<T>& a, const Polynomial<T>& b) {
  return divmod(a, b).second;
}

/// Quotient a / b over ℤ; throws unless b divides a exactly in ℤ[x].
inline IntegerPolynomial exact_quotient(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  if (b.is_zero()) throw PreconditionError("polynomial division by zero");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw PreconditionError("inexact polynomial division");
  std::vector<Integer> rem(a.coefficients());
  std::vector<Integer> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Integer(0));
  const Integer& lead = b.leading();
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[i] == 0) continue;
    if (rem[i] % lead != 0) throw PreconditionError("inexact polynomial division");
    Integer factor = rem[i] / lead;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= factor * b[j];
    quo[i - db] = std::move(factor);
  }
  for (int i = 0; i < db; ++i) {
    if (rem[i] != 0) throw PreconditionError("inexact polynomial division");
  }
  return IntegerPolynomial(std::move(quo));
}

/// True when b divides a in ℤ[x].
inline bool divides(const IntegerPolynomial& b, const IntegerPolynomial& a) {
  try {
    (void)exact_quotient(a, b);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

inline RationalPolynomial monic(const RationalPolynomial& p) {
  if (p.is_zero()) return p;
  return (Rational(1) / p.leading()) * p;
}

/// Monic gcd over ℚ. gcd(p, 0) = p / lead(p); both zero is rejected.
inline RationalPolynomial poly_gcd(RationalPolynomial a, RationalPolynomial b) {
  if (a.is_zero() && b.is_zero()) throw PreconditionError("gcd of two zero polynomials");
  while (!b.is_zero()) {
    RationalPolynomial r = remainder(a, b);
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

inline IntegerPolynomial poly_gcd(const IntegerPolynomial& a, const IntegerPolynomial& b) {
  return primitive_part(poly_gcd(to_rational(a), to_rational(b)));
}

/**
 * Square-free decomposition over ℚ (Yun): returns monic a_1, a_2, ... with
 * p = lead(p) * a_1 * a_2^2 * a_3^3 ...; entry i-1 holds a_i and may be 1.
 */
inline std::vector<RationalPolynomial> squarefree_decomposition(const RationalPolynomial& p) {
  if (p.degree() < 1) return {};
  const RationalPolynomial f = monic(p);
  const RationalPolynomial df = derivative(f);
  const RationalPolynomial c = poly_gcd(f, df);
  RationalPolynomial w = divmod(f, c).first;
  RationalPolynomial y = divmod(df, c).first;
  RationalPolynomial z = y - derivative(w);
  std::vector<RationalPolynomial> out;
  while (w.degree() > 0) {
    RationalPolynomial g = z.is_zero() ? w : poly_gcd(w, z);
    out.push_back(g);
    w = divmod(w, g).first;
    y = divmod(z, g).first;
    z = y - derivative(w);
  }
  return out;
}

template <class T>
std::string to_string(const Polynomial<T>& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const T c = p[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const T mag = neg ? T(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << to_string(mag);
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

}  // namespace goe

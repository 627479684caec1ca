#pragma once

/**
 * Factorization over ℚ for small degrees.
 *
 * Linear factors come from the rational-root test. Higher-degree factors are
 * found by Kronecker's method: a degree-d factor g is determined by its values
 * at d + 1 integer points, and each g(x_j) must divide p(x_j). Points are
 * chosen where |p(x_j)| has few divisors, which keeps the combination search
 * small for the desk-scale polynomials this toolkit handles.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "goe/errors.hpp"
#include "goe/exact_algebra/number.hpp"
#include "goe/exact_algebra/polynomial.hpp"

namespace goe {

struct PolynomialFactor {
  IntegerPolynomial factor;  ///< primitive, positive leading coefficient, irreducible over ℚ
  int multiplicity = 1;
};

inline constexpr int kDefaultFactorDegreeBound = 8;

namespace detail {

inline std::vector<std::uint64_t> positive_divisors(std::uint64_t v) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.push_back(d);
    if (d != v / d) large.push_back(v / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

inline std::optional<IntegerPolynomial> rational_root_factor(const IntegerPolynomial& f) {
  if (f[0] == 0) return IntegerPolynomial::x();
  const Integer a0 = abs_value(f[0]);
  const Integer an = abs_value(f.leading());
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 40;
  if (a0 > kLimit || an > kLimit) throw ResourceError("coefficients too large for the rational-root test");
  const auto nums = positive_divisors(a0.convert_to<std::uint64_t>());
  const auto dens = positive_divisors(an.convert_to<std::uint64_t>());
  const RationalPolynomial fr = to_rational(f);
  for (auto den : dens)
    for (auto num : nums)
      for (int s : {1, -1}) {
        const Rational r(Integer(s) * Integer(num), Integer(den));
        if (fr(r) == 0) return primitive_part(IntegerPolynomial{-numerator_of(r), denominator_of(r)});
      }
  return std::nullopt;
}

inline std::optional<IntegerPolynomial> kronecker_factor(const IntegerPolynomial& f, int d) {
  const int n = f.degree();
  const long span = 4L * n + 8;
  struct Sample {
    long x;
    Integer value;
  };
  std::vector<Sample> samples;
  for (long x = -span; x <= span; ++x) samples.push_back({x, f(Integer(x))});
  std::stable_sort(samples.begin(), samples.end(),
                   [](const Sample& a, const Sample& b) { return abs_value(a.value) < abs_value(b.value); });

  constexpr std::uint64_t kLimit = std::uint64_t{1} << 40;
  std::vector<Sample> chosen;
  std::vector<std::vector<std::uint64_t>> divisors;
  std::vector<Sample> extra;
  for (const auto& s : samples) {
    if (s.value == 0) return std::nullopt;  // integer root: a linear factor exists
    if (static_cast<int>(chosen.size()) < d + 1) {
      if (abs_value(s.value) > kLimit) continue;
      chosen.push_back(s);
      divisors.push_back(positive_divisors(abs_value(s.value).convert_to<std::uint64_t>()));
    } else if (extra.size() < 4) {
      extra.push_back(s);
    }
  }
  if (static_cast<int>(chosen.size()) < d + 1) throw ResourceError("no usable interpolation points for Kronecker factoring");

  // Lagrange basis over the chosen points.
  std::vector<RationalPolynomial> basis;
  for (int j = 0; j <= d; ++j) {
    RationalPolynomial l = RationalPolynomial::constant(1);
    for (int i = 0; i <= d; ++i) {
      if (i == j) continue;
      const Rational denom(chosen[j].x - chosen[i].x);
      l *= RationalPolynomial{Rational(-chosen[i].x) / denom, Rational(1) / denom};
    }
    basis.push_back(std::move(l));
  }

  std::vector<Integer> values(static_cast<std::size_t>(d) + 1);
  std::optional<IntegerPolynomial> found;
  std::function<bool(int)> search = [&](int j) -> bool {
    if (j > d) {
      RationalPolynomial g;
      for (int i = 0; i <= d; ++i) g += Rational(values[i]) * basis[i];
      if (g.degree() != d) return false;
      std::vector<Integer> coeffs;
      for (const auto& c : g.coefficients()) {
        if (!is_integral(c)) return false;
        coeffs.push_back(numerator_of(c));
      }
      const IntegerPolynomial gi = primitive_part(IntegerPolynomial(std::move(coeffs)));
      for (const auto& e : extra) {
        const Integer ge = gi(Integer(e.x));
        if (ge == 0 || e.value % ge != 0) return false;
      }
      if (!divides(gi, f)) return false;
      found = gi;
      return true;
    }
    for (auto dv : divisors[j]) {
      // g and -g are associates: fix the sign at the first point.
      for (int s : {1, -1}) {
        if (j == 0 && s < 0) continue;
        values[j] = Integer(s) * Integer(dv);
        if (search(j + 1)) return true;
      }
    }
    return false;
  };
  search(0);
  return found;
}

/// An irreducible factor of least degree of the primitive polynomial f.
inline IntegerPolynomial smallest_irreducible_factor(const IntegerPolynomial& f) {
  if (f.degree() <= 1) return f;
  if (auto lin = rational_root_factor(f)) return *lin;
  for (int d = 2; 2 * d <= f.degree(); ++d) {
    if (auto g = kronecker_factor(f, d)) return *g;
  }
  return f;
}

}  // namespace detail

/**
 * Irreducible factors of p over ℚ with multiplicities, each primitive with
 * positive leading coefficient, sorted by degree then coefficients. The
 * product of factor^multiplicity equals the primitive part of p.
 */
inline std::vector<PolynomialFactor> factor_rational(const IntegerPolynomial& p,
                                                     int degree_bound = kDefaultFactorDegreeBound) {
  if (p.is_zero()) throw PreconditionError("cannot factor the zero polynomial");
  if (p.degree() > degree_bound) {
    throw UnsupportedDegreeError("degree " + std::to_string(p.degree()) + " exceeds the factorization bound " +
                                 std::to_string(degree_bound));
  }
  std::vector<PolynomialFactor> out;
  IntegerPolynomial f = primitive_part(p);
  while (f.degree() >= 1) {
    const IntegerPolynomial g = detail::smallest_irreducible_factor(f);
    int mult = 0;
    while (f.degree() >= g.degree() && divides(g, f)) {
      f = exact_quotient(f, g);
      ++mult;
    }
    out.push_back({g, mult});
  }
  std::sort(out.begin(), out.end(), [](const PolynomialFactor& a, const PolynomialFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return a.factor.coefficients() < b.factor.coefficients();
  });
  return out;
}

inline bool is_irreducible(const IntegerPolynomial& p, int degree_bound = kDefaultFactorDegreeBound) {
  const auto fs = factor_rational(p, degree_bound);
  return fs.size() == 1 && fs.front().multiplicity == 1;
}

}  // namespace goe

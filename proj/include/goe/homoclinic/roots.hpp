#pragma once

/**
 * Numerical roots of integer polynomials, certified against the exact
 * inside/on/outside unit-disk counts.
 *
 * Each square-free part is handled separately. Real roots come from exact
 * Sturm isolation, rational bisection and a Newton polish; the non-real ones
 * from Aberth iteration. If the numerical moduli disagree with the exact disk
 * counts, a ResourceError is raised rather than returning a wrong split.
 */

#include <algorithm>
#include <vector>

#include "goe/errors.hpp"
#include "goe/exact_algebra/polynomial.hpp"
#include "goe/exact_algebra/sturm.hpp"
#include "goe/exact_algebra/unit_circle.hpp"
#include "goe/homoclinic/real.hpp"

namespace goe {

enum class DiskSide { Inside, On, Outside };

struct LocatedRoot {
  ComplexReal value;
  int multiplicity = 1;
  DiskSide side = DiskSide::On;
};

namespace detail {

inline std::vector<Real> real_coefficients(const IntegerPolynomial& p) {
  std::vector<Real> c;
  for (const auto& x : p.coefficients()) c.push_back(to_real(x));
  return c;
}

template <class T>
void horner_with_derivative(const std::vector<Real>& c, const T& z, T& value, T& slope) {
  value = T(0);
  slope = T(0);
  for (std::size_t i = c.size(); i-- > 0;) {
    slope = slope * z + value;
    value = value * z + T(c[i]);
  }
}

/// All roots of a square-free polynomial of degree ≥ 1 by Aberth iteration.
inline std::vector<ComplexReal> aberth_roots(const std::vector<Real>& c) {
  const std::size_t d = c.size() - 1;
  Real radius = 0;
  for (std::size_t i = 0; i < d; ++i) {
    const Real r = pow(abs(c[i] / c[d]), Real(1) / Real(d - i));
    radius = std::max(radius, r);
  }
  if (radius == 0) radius = 1;
  std::vector<ComplexReal> z;
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  for (std::size_t k = 0; k < d; ++k) {
    const Real angle = two_pi * Real(k) / Real(d) + Real(0.4);
    z.emplace_back(radius * cos(angle), radius * sin(angle));
  }
  const Real stop("1e-45");
  for (int iter = 0; iter < 2000; ++iter) {
    Real worst = 0;
    for (std::size_t k = 0; k < d; ++k) {
      ComplexReal value, slope;
      horner_with_derivative(c, z[k], value, slope);
      if (value == ComplexReal(0)) continue;
      const ComplexReal ratio = value / slope;
      ComplexReal repulsion(0);
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) repulsion += ComplexReal(1) / (z[k] - z[j]);
      const ComplexReal step = ratio / (ComplexReal(1) - ratio * repulsion);
      z[k] -= step;
      worst = std::max(worst, Real(abs(step) / std::max(Real(1), Real(abs(z[k])))));
    }
    if (worst < stop) return z;
  }
  throw ResourceError("Aberth iteration did not converge");
}

inline Real refine_real_root(const IntegerPolynomial& p, const std::vector<Real>& c, RootInterval iv) {
  const RationalPolynomial pr = to_rational(p);
  const int lo_sign = sign_of(pr(iv.lo));
  for (int i = 0; i < 80; ++i) {
    const Rational mid = (iv.lo + iv.hi) / 2;
    const int s = sign_of(pr(mid));
    if (s == 0) return to_real(mid);
    (s == lo_sign ? iv.lo : iv.hi) = mid;
  }
  const Real lo = to_real(iv.lo), hi = to_real(iv.hi);
  Real x = (lo + hi) / 2;
  for (int i = 0; i < 8; ++i) {
    Real value, slope;
    horner_with_derivative(c, x, value, slope);
    if (slope == 0) break;
    const Real next = x - value / slope;
    if (next < lo || next > hi) break;
    x = next;
  }
  return x;
}

}  // namespace detail

/// Roots of p with multiplicities and their exact position relative to the unit circle.
inline std::vector<LocatedRoot> locate_roots(const IntegerPolynomial& p) {
  if (p.degree() < 1) throw PreconditionError("root location needs a nonconstant polynomial");
  std::vector<LocatedRoot> out;
  const auto parts = squarefree_decomposition(to_rational(p));
  const Real band("1e-30");
  for (std::size_t mult = 1; mult <= parts.size(); ++mult) {
    if (parts[mult - 1].degree() < 1) continue;
    const IntegerPolynomial part = primitive_part(parts[mult - 1]);
    const std::vector<Real> c = detail::real_coefficients(part);
    std::vector<ComplexReal> roots;
    for (const auto& iv : isolate_real_roots(parts[mult - 1])) roots.emplace_back(detail::refine_real_root(part, c, iv), 0);
    const std::size_t nonreal = static_cast<std::size_t>(part.degree()) - roots.size();
    if (nonreal > 0) {
      auto all = detail::aberth_roots(c);
      std::sort(all.begin(), all.end(), [](const ComplexReal& a, const ComplexReal& b) { return a.imag() > b.imag(); });
      for (std::size_t i = 0; i < nonreal / 2; ++i) {
        if (all[i].imag() < band) throw ResourceError("could not separate non-real roots from the real axis");
        roots.push_back(all[i]);
        roots.push_back(conj(all[i]));
      }
    }
    const DiskRootCounts exact = disk_root_counts(part);
    int inside = 0, outside = 0;
    for (const auto& z : roots) {
      const Real m = abs(z);
      DiskSide side = DiskSide::On;
      if (m < 1 - band) {
        side = DiskSide::Inside;
        ++inside;
      } else if (m > 1 + band) {
        side = DiskSide::Outside;
        ++outside;
      }
      out.push_back({z, static_cast<int>(mult), side});
    }
    if (inside != exact.inside || outside != exact.outside)
      throw ResourceError("numerical roots disagree with the exact unit-disk counts");
  }
  std::sort(out.begin(), out.end(), [](const LocatedRoot& a, const LocatedRoot& b) {
    const Real ma = abs(a.value), mb = abs(b.value);
    if (ma != mb) return ma < mb;
    return a.value.imag() < b.value.imag();
  });
  return out;
}

}  // namespace goe

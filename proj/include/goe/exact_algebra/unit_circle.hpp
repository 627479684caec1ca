#pragma once

/**
 * Exact location of polynomial roots relative to the unit circle.
 *
 * Two independent routes are provided. `unit_circle_root_count` folds the
 * self-reciprocal part of p through y = x + 1/x and counts real roots of the
 * folded polynomial in (-2, 2) with Sturm sequences. `disk_root_counts` maps
 * the disk to the left half-plane with x = (w + 1) / (w - 1) and counts
 * half-plane roots through a Cauchy index (Routh-Hurwitz style), after
 * splitting off root pairs symmetric about the imaginary axis with a gcd.
 */

#include <stdexcept>
#include <utility>
#include <vector>

#include "goe/errors.hpp"
#include "goe/exact_algebra/number.hpp"
#include "goe/exact_algebra/polynomial.hpp"
#include "goe/exact_algebra/sturm.hpp"

namespace goe {

namespace detail {

inline RationalPolynomial linear_factor(const Rational& root) {
  return RationalPolynomial{-root, Rational(1)};
}

/// Circle roots of a square-free polynomial with nonzero constant term.
inline int circle_roots_squarefree(RationalPolynomial s) {
  int count = 0;
  for (const Rational& r : {Rational(1), Rational(-1)}) {
    if (s(r) == 0) {
      ++count;
      s = divmod(s, linear_factor(r)).first;
    }
  }
  if (s.degree() < 1) return count;
  // Roots closed under λ -> 1/λ; with ±1 removed this part is palindromic
  // of even degree and carries every remaining circle root.
  const RationalPolynomial g = poly_gcd(s, reversal(s));
  if (g.degree() < 1) return count;
  const int deg = g.degree();
  if (deg % 2 != 0) throw std::logic_error("self-reciprocal part has odd degree");
  for (int i = 0; i <= deg; ++i) {
    if (g[i] != g[deg - i]) throw std::logic_error("self-reciprocal part is not palindromic");
  }
  const int m = deg / 2;
  // x^j + x^-j = D_j(x + 1/x), D_0 = 2, D_1 = y, D_{j+1} = y D_j - D_{j-1}.
  const RationalPolynomial y = RationalPolynomial::x();
  RationalPolynomial d_prev = RationalPolynomial::constant(2);
  RationalPolynomial d_cur = y;
  RationalPolynomial folded = RationalPolynomial::constant(g[m]);
  for (int j = 1; j <= m; ++j) {
    folded += g[m + j] * d_cur;
    RationalPolynomial d_next = y * d_cur - d_prev;
    d_prev = std::move(d_cur);
    d_cur = std::move(d_next);
  }
  // y = ±2 corresponds to x = ±1, already removed.
  return count + 2 * sturm_count(folded, Rational(-2), Rational(2));
}

/// q(iy) = re(y) + i im(y) for real q.
inline std::pair<RationalPolynomial, RationalPolynomial> split_on_imaginary_axis(const RationalPolynomial& q) {
  std::vector<Rational> re(q.coefficients().size(), Rational(0));
  std::vector<Rational> im(q.coefficients().size(), Rational(0));
  for (int j = 0; j <= q.degree(); ++j) {
    switch (j % 4) {
      case 0: re[j] = q[j]; break;
      case 1: im[j] = q[j]; break;
      case 2: re[j] = -q[j]; break;
      default: im[j] = -q[j]; break;
    }
  }
  return {RationalPolynomial(std::move(re)), RationalPolynomial(std::move(im))};
}

}  // namespace detail

/// Number of complex roots of p on the unit circle, with multiplicity.
inline int unit_circle_root_count(const IntegerPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("unit-circle count of the zero polynomial");
  if (p[0] == 0) throw PreconditionError("unit-circle count needs a nonzero constant term");
  int total = 0;
  const auto parts = squarefree_decomposition(to_rational(p));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    total += static_cast<int>(i + 1) * detail::circle_roots_squarefree(parts[i]);
  }
  return total;
}

struct DiskRootCounts {
  int inside = 0;
  int on = 0;
  int outside = 0;

  friend bool operator==(const DiskRootCounts&, const DiskRootCounts&) = default;
};

/// Roots of p strictly inside, on, and strictly outside the unit circle, with multiplicity.
inline DiskRootCounts disk_root_counts(const IntegerPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("root location of the zero polynomial");
  DiskRootCounts out;
  RationalPolynomial f = to_rational(p);
  // x = 1 is sent to w = infinity; remove it first.
  while (f.degree() >= 1 && f(Rational(1)) == 0) {
    f = divmod(f, detail::linear_factor(Rational(1))).first;
    ++out.on;
  }
  const int n = f.degree();
  if (n < 1) return out;
  // q(w) = (w - 1)^n f((w + 1) / (w - 1)); |x| < 1 iff Re w < 0.
  const RationalPolynomial wp1{Rational(1), Rational(1)};
  const RationalPolynomial wm1{Rational(-1), Rational(1)};
  RationalPolynomial q;
  for (int k = 0; k <= n; ++k) {
    if (f[k] == 0) continue;
    q += f[k] * (power(wp1, static_cast<unsigned>(k)) * power(wm1, static_cast<unsigned>(n - k)));
  }
  // A common real-coefficient root y of re and im means q vanishes at both
  // iy and -iy. The shared factor collects the pairs {w, -w} of roots of q:
  // real y give imaginary-axis roots, the rest split evenly across the axis.
  const auto [re, im] = detail::split_on_imaginary_axis(q);
  const RationalPolynomial g = poly_gcd(re, im);
  int low = 0;
  while (g[low] == 0) ++low;
  std::vector<Rational> paired_coeffs(static_cast<std::size_t>(g.degree()) + 1, Rational(0));
  for (int j = low; j <= g.degree(); ++j) {
    if (g[j] == 0) continue;
    if ((j - low) % 2 != 0) throw std::logic_error("paired factor has mixed parity");
    paired_coeffs[j] = ((j - low) / 2) % 2 == 0 ? g[j] : Rational(-g[j]);
  }
  const RationalPolynomial paired(std::move(paired_coeffs));
  const auto [reduced, rem] = divmod(q, paired);
  if (!rem.is_zero()) throw std::logic_error("paired factor does not divide");
  int axis = 0;
  if (g.degree() >= 1) {
    const auto parts = squarefree_decomposition(g);
    for (std::size_t i = 0; i < parts.size(); ++i) axis += static_cast<int>(i + 1) * real_root_count(parts[i]);
  }
  out.on += axis;
  out.inside += (g.degree() - axis) / 2;
  out.outside += (g.degree() - axis) / 2;

  const int d = reduced.degree();
  const auto [r2, i2] = detail::split_on_imaginary_axis(reduced);
  // Δarg q(iy) over the line = π (left - right) = π (-Ind(im/re) + boundary).
  int twice_boundary = 0;
  if (i2.degree() > r2.degree()) {
    const int s_plus = sign_of(i2.leading()) * sign_of(r2.leading());
    const int s_minus = (i2.degree() - r2.degree()) % 2 == 0 ? s_plus : -s_plus;
    twice_boundary = s_plus - s_minus;
  }
  const int left_minus_right = -cauchy_index(i2, r2) + twice_boundary / 2;
  const int left = (d + left_minus_right) / 2;
  out.inside += left;
  out.outside += d - left;
  return out;
}

}  // namespace goe

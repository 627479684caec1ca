#pragma once

/**
 * Stable/unstable splitting ℝⁿ = E_s ⊕ E_u of a hyperbolic automorphism.
 *
 * χ_A factors over ℝ as p_s·p_u, with p_s collecting the roots inside the
 * unit disk. The two factors are coprime, so X = p_s(A) + p_u(A) is
 * invertible and P_s = p_u(A) X⁻¹ is the projection onto ker p_s(A) = E_s
 * along E_u; P_u = p_s(A) X⁻¹ is the complementary one.
 */

#include <algorithm>
#include <vector>

#include "goe/errors.hpp"
#include "goe/exact_algebra/matrix.hpp"
#include "goe/homoclinic/real.hpp"
#include "goe/homoclinic/roots.hpp"
#include "goe/toral/classification.hpp"

namespace goe {

inline constexpr double kDefaultPrecision = 1e-9;

struct SpectralSplit {
  IntegerMatrix a;
  IntegerMatrix a_inverse;
  RealMatrix p_s;
  RealMatrix p_u;
  std::vector<LocatedRoot> roots;
  /// λ < 1 with ‖Aⁿ P_s‖ and ‖A⁻ⁿ P_u‖ eventually below λⁿ.
  Real contraction_rate;
  /// Largest of |root| and 1/|root|: per-step growth of representation error.
  Real expansion_rate;
  double precision = kDefaultPrecision;
  Real residual;  // largest of the three invariant residuals below

  std::size_t dim() const { return a.size(); }
};

namespace detail {

/// Real coefficients of ∏ (x - z)^mult over the selected roots.
inline std::vector<Real> real_polynomial_from_roots(const std::vector<LocatedRoot>& roots, DiskSide side) {
  std::vector<ComplexReal> c{ComplexReal(1)};
  for (const auto& r : roots) {
    if (r.side != side) continue;
    for (int m = 0; m < r.multiplicity; ++m) {
      std::vector<ComplexReal> next(c.size() + 1, ComplexReal(0));
      for (std::size_t i = 0; i < c.size(); ++i) {
        next[i + 1] += c[i];
        next[i] -= r.value * c[i];
      }
      c = std::move(next);
    }
  }
  std::vector<Real> out;
  for (const auto& z : c) out.push_back(z.real());
  return out;
}

inline RealMatrix evaluate_at_matrix(const std::vector<Real>& c, const RealMatrix& a) {
  RealMatrix acc(a.size());
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * a + c[i] * RealMatrix::identity(a.size());
  return acc;
}

}  // namespace detail

inline SpectralSplit stable_splitting(const IntegerMatrix& a, double precision = kDefaultPrecision) {
  const MatrixClassification cls = classify_matrix(a);
  if (!cls.is_hyperbolic) throw PreconditionError("stable splitting needs a hyperbolic automorphism");
  SpectralSplit s;
  s.a = a;
  s.a_inverse = unimodular_inverse(a);
  s.precision = precision;
  s.roots = locate_roots(cls.char_poly);

  const RealMatrix ar(a);
  const RealMatrix ps_a = detail::evaluate_at_matrix(detail::real_polynomial_from_roots(s.roots, DiskSide::Inside), ar);
  const RealMatrix pu_a = detail::evaluate_at_matrix(detail::real_polynomial_from_roots(s.roots, DiskSide::Outside), ar);
  const RealMatrix x_inv = inverse(ps_a + pu_a);
  s.p_s = pu_a * x_inv;
  s.p_u = ps_a * x_inv;

  const RealMatrix id = RealMatrix::identity(a.size());
  const Real scale = std::max(Real(1), ar.max_abs_entry());
  s.residual = std::max({(s.p_s + s.p_u - id).max_abs_entry(), (s.p_s * s.p_s - s.p_s).max_abs_entry(),
                         (ar * s.p_s - s.p_s * ar).max_abs_entry() / scale});
  if (s.residual > Real(precision)) throw ResourceError("splitting residual exceeds the requested precision");

  Real max_in = 0, min_out = -1, max_mod = 0, min_mod = -1;
  for (const auto& r : s.roots) {
    const Real m = abs(r.value);
    max_mod = std::max(max_mod, m);
    if (min_mod < 0 || m < min_mod) min_mod = m;
    if (r.side == DiskSide::Inside) max_in = std::max(max_in, m);
    if (r.side == DiskSide::Outside && (min_out < 0 || m < min_out)) min_out = m;
  }
  // Forward decay on E_s is governed by max_in, backward decay on E_u by 1/min_out.
  const Real base = std::max(max_in, Real(1) / min_out);
  s.contraction_rate = base + (1 - base) / 100;
  s.expansion_rate = std::max(max_mod, Real(1) / min_mod);
  return s;
}

}  // namespace goe

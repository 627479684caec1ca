#pragma once

/**
 * Points of the homoclinicity group of 0̄ for a hyperbolic f_A.
 *
 * h_k = P_s k mod ℤⁿ for k ∈ ℤⁿ. Forward iterates of the representative
 * P_s k contract along E_s; backward iterates are congruent to -A⁻ⁿ P_u k
 * and contract along E_u. So every h_k is homoclinic to 0̄, and k ↦ h_k is
 * an injective group homomorphism.
 */

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "goe/errors.hpp"
#include "goe/exact_algebra/lattice.hpp"
#include "goe/homoclinic/real.hpp"
#include "goe/homoclinic/splitting.hpp"
#include "goe/toral/affine_map.hpp"
#include "goe/toral/endomorphism.hpp"

namespace goe {

inline constexpr double kDefaultTolerance = 1e-6;
inline constexpr int kDefaultHorizon = 30;
inline constexpr std::int64_t kDefaultLatticeBox = 1'000'000;

struct HomoclinicSample {
  IntegerVector k;
  RealVector point;  // in [0, 1)ⁿ
};

inline Integer sup_norm(const IntegerVector& k) {
  Integer m = 0;
  for (const auto& x : k) m = std::max(m, abs_value(x));
  return m;
}

inline HomoclinicSample homoclinic_point(const SpectralSplit& split, const IntegerVector& k,
                                         std::int64_t box = kDefaultLatticeBox) {
  if (k.size() != split.dim()) throw PreconditionError("lattice index has the wrong dimension");
  if (sup_norm(k) > box) throw PreconditionError("lattice index outside the configured box");
  RealVector point = split.p_s.apply(k);
  for (auto& x : point) x = frac_real(x);
  return {k, std::move(point)};
}

struct DecayCheck {
  bool holds = true;
  Real constant;          // C in C·λ^|n|
  Real kappa;             // sup_j max(‖Aʲ P_s‖, ‖A⁻ʲ P_u‖) / λʲ over the horizon
  Real rate;              // λ
  int worst_step = 0;     // n with the smallest slack
  Real worst_slack;       // bound minus distance at that n
  std::vector<Real> forward;   // d(fⁿ x, 0) for n = 0..horizon
  std::vector<Real> backward;  // d(f⁻ⁿ x, 0) for n = 0..horizon
};

/**
 * Checks d(f_Aⁿ x, 0̄) ≤ C·λ^|n| + tol for |n| ≤ horizon, where x is the
 * sample point and C = κ·max(‖P_s k‖, ‖P_u k‖, d(x, 0̄)). Iterates use the
 * integer matrix A (or A⁻¹) with reduction mod 1 at every step.
 */
inline DecayCheck check_decay(const SpectralSplit& split, const HomoclinicSample& sample, int horizon,
                              double tol = kDefaultTolerance) {
  if (horizon < 1) throw PreconditionError("decay horizon must be at least 1");
  if (sample.point.size() != split.dim()) throw PreconditionError("sample has the wrong dimension");
  const Real unit_roundoff = std::numeric_limits<Real>::epsilon();
  if (unit_roundoff * 16 * pow(split.expansion_rate, horizon) > Real(tol) / 2)
    throw ResourceError("horizon too long for the working precision; reduce the horizon");

  DecayCheck out;
  out.rate = split.contraction_rate;
  const RealMatrix a(split.a), a_inv(split.a_inverse);
  RealMatrix fwd = split.p_s, bwd = split.p_u;
  Real lambda_j = 1;
  out.kappa = 0;
  for (int j = 0; j <= horizon; ++j) {
    out.kappa = std::max({out.kappa, fwd.inf_norm() / lambda_j, bwd.inf_norm() / lambda_j});
    fwd = a * fwd;
    bwd = a_inv * bwd;
    lambda_j *= out.rate;
  }
  out.constant = out.kappa * std::max({max_abs(split.p_s.apply(sample.k)), max_abs(split.p_u.apply(sample.k)),
                                       torus_norm(sample.point)});

  auto run = [&](const RealMatrix& step, std::vector<Real>& trace, int sign) {
    RealVector x = sample.point;
    Real bound_scale = 1;
    for (int n = 0; n <= horizon; ++n) {
      if (n > 0) {
        x = step.apply(x);
        for (auto& v : x) v = frac_real(v);
        bound_scale *= out.rate;
      }
      const Real d = torus_norm(x);
      trace.push_back(d);
      const Real slack = out.constant * bound_scale + Real(tol) - d;
      if (slack < out.worst_slack) {
        out.worst_slack = slack;
        out.worst_step = sign * n;
      }
      if (slack < 0) out.holds = false;
    }
  };
  out.worst_slack = out.constant + Real(tol) + 1;
  run(a, out.forward, 1);
  run(a_inv, out.backward, -1);
  return out;
}

inline bool verify_decay(const SpectralSplit& split, const HomoclinicSample& sample, int horizon,
                         double tol = kDefaultTolerance) {
  return check_decay(split, sample, horizon, tol).holds;
}

inline bool verify_decay(const IntegerMatrix& a, const HomoclinicSample& sample, int horizon,
                         double tol = kDefaultTolerance) {
  return verify_decay(stable_splitting(a), sample, horizon, tol);
}

namespace detail {

/// Odometer over a box of integer vectors with per-coordinate ranges.
class BoxOdometer {
 public:
  BoxOdometer(std::vector<std::int64_t> lo, std::vector<std::int64_t> hi) : lo_(std::move(lo)), hi_(std::move(hi)), k_(lo_) {}
  const std::vector<std::int64_t>& value() const { return k_; }
  /// Advances; returns the changed coordinates as (index, delta) via the callback; false at the end.
  template <class F>
  bool next(F&& on_change) {
    for (std::size_t i = 0; i < k_.size(); ++i) {
      if (k_[i] < hi_[i]) {
        ++k_[i];
        on_change(i, std::int64_t{1});
        return true;
      }
      on_change(i, lo_[i] - k_[i]);
      k_[i] = lo_[i];
    }
    return false;
  }

 private:
  std::vector<std::int64_t> lo_, hi_, k_;
};

inline double frac_double(double x) {
  const double f = x - std::floor(x);
  return f >= 1.0 ? 0.0 : f;
}

inline double dist_to_integer_double(double x) { return std::abs(x - std::nearbyint(x)); }

inline std::uint64_t box_volume(std::size_t n, std::int64_t k, std::uint64_t cap) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < n; ++i) {
    v *= static_cast<std::uint64_t>(2 * k + 1);
    if (v > cap) throw ResourceError("lattice box too large");
  }
  return v;
}

}  // namespace detail

/**
 * Fraction of the gridⁿ congruence cells of 𝕋ⁿ that contain some h_k with
 * ‖k‖∞ ≤ K. Cells are indexed in double precision; a sample on a cell
 * boundary may land in either neighbour, which does not matter here.
 */
inline double density_coverage(const SpectralSplit& split, std::int64_t max_k, std::int64_t grid) {
  if (max_k < 0 || grid < 1) throw PreconditionError("coverage needs K >= 0 and grid >= 1");
  const std::size_t n = split.dim();
  detail::box_volume(n, max_k, std::uint64_t{1} << 34);
  std::uint64_t cells = 1;
  for (std::size_t i = 0; i < n; ++i) {
    cells *= static_cast<std::uint64_t>(grid);
    if (cells > (std::uint64_t{1} << 28)) throw ResourceError("coverage grid too fine");
  }
  const std::vector<double> ps = split.p_s.row_major_doubles();
  std::vector<std::int64_t> lo(n, -max_k), hi(n, max_k);
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y[i] += ps[i * n + j] * static_cast<double>(lo[j]);
  std::vector<bool> hit(cells, false);
  std::uint64_t covered = 0;
  detail::BoxOdometer odo(lo, hi);
  do {
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto cell = static_cast<std::int64_t>(detail::frac_double(y[i]) * static_cast<double>(grid));
      cell = std::clamp<std::int64_t>(cell, 0, grid - 1);
      index = index * static_cast<std::uint64_t>(grid) + static_cast<std::uint64_t>(cell);
    }
    if (!hit[index]) {
      hit[index] = true;
      ++covered;
    }
  } while (odo.next([&](std::size_t j, std::int64_t delta) {
    for (std::size_t i = 0; i < n; ++i) y[i] += ps[i * n + j] * static_cast<double>(delta);
  }));
  return static_cast<double>(covered) / static_cast<double>(cells);
}

struct OracleResult {
  bool pre_injective = true;
  std::optional<IntegerVector> witness;  // k with τ(h_k) = τ(0̄) but h_k ≠ 0̄
  std::uint64_t examined = 0;
};

/**
 * Bounded search for two homoclinic points identified by τ: a nonzero k with
 * ‖k‖∞ ≤ K such that B·P_s·k is within tol of ℤⁿ while P_s·k is not. Only the
 * linear part matters, since the translation cancels in τ(h_k) - τ(0̄).
 * A heuristic cross-check; the exact verdict comes from is_pre_injective.
 */
inline OracleResult pre_injectivity_oracle(const SpectralSplit& split, const AffineToralMap& tau, std::int64_t max_k,
                                           double tol = kDefaultTolerance) {
  if (!commutes(tau, split.a)) throw PreconditionError("map does not commute with the automorphism");
  if (max_k < 0) throw PreconditionError("oracle box must be nonnegative");
  const std::size_t n = split.dim();
  detail::box_volume(n, max_k, std::uint64_t{1} << 36);
  const std::vector<double> q = (RealMatrix(tau.linear()) * split.p_s).row_major_doubles();
  const std::vector<double> ps = split.p_s.row_major_doubles();
  // k and -k collide together, so the first coordinate only runs over [0, K].
  std::vector<std::int64_t> lo(n, -max_k), hi(n, max_k);
  lo[0] = 0;
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y[i] += q[i * n + j] * static_cast<double>(lo[j]);
  OracleResult out;
  detail::BoxOdometer odo(lo, hi);
  do {
    ++out.examined;
    const auto& k = odo.value();
    bool near = true;
    for (std::size_t i = 0; i < n && near; ++i) near = detail::dist_to_integer_double(y[i]) <= tol;
    if (!near) continue;
    bool zero = true;
    for (auto v : k) zero = zero && v == 0;
    if (zero) continue;
    bool h_near_zero = true;
    for (std::size_t i = 0; i < n && h_near_zero; ++i) {
      double s = 0;
      for (std::size_t j = 0; j < n; ++j) s += ps[i * n + j] * static_cast<double>(k[j]);
      h_near_zero = detail::dist_to_integer_double(s) <= tol;
    }
    if (h_near_zero) continue;
    out.pre_injective = false;
    out.witness = IntegerVector(k.begin(), k.end());
    return out;
  } while (odo.next([&](std::size_t j, std::int64_t delta) {
    for (std::size_t i = 0; i < n; ++i) y[i] += q[i * n + j] * static_cast<double>(delta);
  }));
  return out;
}

inline OracleResult pre_injectivity_oracle(const IntegerMatrix& a, const AffineToralMap& tau, std::int64_t max_k,
                                           double tol = kDefaultTolerance) {
  return pre_injectivity_oracle(stable_splitting(a), tau, max_k, tol);
}

}  // namespace goe

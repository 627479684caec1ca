#pragma once

// 50-digit binary floating point for the homoclinic computations. Orbit
// checks multiply representation error by the expansion rate at every step,
// so the projections are built well past double precision.

#include <algorithm>
#include <cstddef>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "goe/errors.hpp"
#include "goe/exact_algebra/matrix.hpp"
#include "goe/exact_algebra/number.hpp"

namespace goe {

using Real = boost::multiprecision::cpp_bin_float_50;
using ComplexReal = boost::multiprecision::cpp_complex_50;
using RealVector = std::vector<Real>;

inline Real to_real(const Integer& z) { return z.convert_to<Real>(); }
inline Real to_real(const Rational& q) { return to_real(numerator_of(q)) / to_real(denominator_of(q)); }

/// x - floor(x), in [0, 1).
inline Real frac_real(const Real& x) {
  Real f = x - floor(x);
  return f >= 1 ? Real(0) : f;
}

/// Distance from x to the nearest integer.
inline Real dist_to_integer(const Real& x) {
  const Real f = frac_real(x);
  return f < 1 - f ? f : Real(1 - f);
}

/// ℓ∞ torus distance from x̄ to 0̄.
inline Real torus_norm(const RealVector& x) {
  Real m = 0;
  for (const auto& v : x) m = std::max(m, dist_to_integer(v));
  return m;
}

inline Real max_abs(const RealVector& v) {
  Real m = 0;
  for (const auto& x : v) m = std::max(m, Real(abs(x)));
  return m;
}

/// Dense n x n real matrix, row-major.
class RealMatrix {
 public:
  RealMatrix() = default;
  explicit RealMatrix(std::size_t n) : n_(n), a_(n * n, Real(0)) {}
  explicit RealMatrix(const IntegerMatrix& m) : RealMatrix(m.size()) {
    for (std::size_t i = 0; i < n_ * n_; ++i) a_[i] = to_real(m.data()[i]);
  }

  static RealMatrix identity(std::size_t n) {
    RealMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t size() const { return n_; }
  Real& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Real& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  friend RealMatrix operator+(RealMatrix x, const RealMatrix& y) {
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
    return x;
  }
  friend RealMatrix operator-(RealMatrix x, const RealMatrix& y) {
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
    return x;
  }
  friend RealMatrix operator*(const Real& s, RealMatrix x) {
    for (auto& v : x.a_) v *= s;
    return x;
  }
  friend RealMatrix operator*(const RealMatrix& x, const RealMatrix& y) {
    RealMatrix r(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k)
        for (std::size_t j = 0; j < x.n_; ++j) r(i, j) += x(i, k) * y(k, j);
    return r;
  }

  RealVector apply(const RealVector& v) const {
    RealVector out(n_, Real(0));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  RealVector apply(const std::vector<Integer>& v) const {
    RealVector r;
    for (const auto& x : v) r.push_back(to_real(x));
    return apply(r);
  }

  Real max_abs_entry() const {
    Real m = 0;
    for (const auto& v : a_) m = std::max(m, Real(abs(v)));
    return m;
  }

  /// Operator norm induced by ℓ∞ (max row sum).
  Real inf_norm() const {
    Real m = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      Real row = 0;
      for (std::size_t j = 0; j < n_; ++j) row += abs((*this)(i, j));
      m = std::max(m, row);
    }
    return m;
  }

  std::vector<double> row_major_doubles() const {
    std::vector<double> out;
    for (const auto& v : a_) out.push_back(v.convert_to<double>());
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Real> a_;
};

/// Gauss-Jordan with partial pivoting.
inline RealMatrix inverse(const RealMatrix& a) {
  const std::size_t n = a.size();
  RealMatrix m(a), inv = RealMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    for (std::size_t i = col + 1; i < n; ++i)
      if (abs(m(i, col)) > abs(m(p, col))) p = i;
    if (m(p, col) == 0) throw PreconditionError("real matrix is singular");
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(m(p, j), m(col, j));
      std::swap(inv(p, j), inv(col, j));
    }
    const Real pivot = m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) /= pivot;
      inv(col, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const Real f = m(i, col);
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace goe

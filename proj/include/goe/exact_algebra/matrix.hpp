#pragma once

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "goe/errors.hpp"
#include "goe/exact_algebra/number.hpp"
#include "goe/exact_algebra/polynomial.hpp"

namespace goe {

/// Square n x n matrix over an exact ring, row-major.
template <class T>
class SquareMatrix {
 public:
  SquareMatrix() = default;

  explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n, T(0)) {}

  SquareMatrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
    a_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw PreconditionError("matrix rows must all have length n");
      for (const auto& v : row) a_.push_back(v);
    }
  }

  static SquareMatrix identity(std::size_t n) {
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static SquareMatrix scalar(std::size_t n, const T& s) { return T(s) * identity(n); }

  std::size_t size() const { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  const std::vector<T>& data() const { return a_; }

  friend SquareMatrix operator+(const SquareMatrix& x, const SquareMatrix& y) {
    require_same_size(x, y);
    SquareMatrix r(x);
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
    return r;
  }

  friend SquareMatrix operator-(const SquareMatrix& x, const SquareMatrix& y) {
    require_same_size(x, y);
    SquareMatrix r(x);
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= y.a_[i];
    return r;
  }

  friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
    require_same_size(x, y);
    const std::size_t n = x.n_;
    SquareMatrix r(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const T& xik = x(i, k);
        if (xik == 0) continue;
        for (std::size_t j = 0; j < n; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }

  friend SquareMatrix operator*(const T& s, const SquareMatrix& m) {
    SquareMatrix r(m);
    for (auto& v : r.a_) v *= s;
    return r;
  }

  template <class V>
  std::vector<V> apply(const std::vector<V>& v) const {
    if (v.size() != n_) throw PreconditionError("vector length does not match matrix dimension");
    std::vector<V> out(n_, V(0));
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out[i] += V(a_[i * n_ + j]) * v[j];
    return out;
  }

  SquareMatrix transpose() const {
    SquareMatrix r(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& v : a_)
      if (v != 0) return false;
    return true;
  }

  friend bool operator==(const SquareMatrix& x, const SquareMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }
  friend bool operator!=(const SquareMatrix& x, const SquareMatrix& y) { return !(x == y); }

 private:
  static void require_same_size(const SquareMatrix& x, const SquareMatrix& y) {
    if (x.n_ != y.n_) throw PreconditionError("matrix dimensions differ");
  }

  std::size_t n_ = 0;
  std::vector<T> a_;
};

using IntegerMatrix = SquareMatrix<Integer>;
using RationalMatrix = SquareMatrix<Rational>;

template <class T>
SquareMatrix<T> matrix_power(const SquareMatrix<T>& m, unsigned e) {
  SquareMatrix<T> r = SquareMatrix<T>::identity(m.size());
  for (unsigned i = 0; i < e; ++i) r = r * m;
  return r;
}

/// Block-diagonal direct sum; blocks may have different dimensions.
template <class T>
SquareMatrix<T> direct_sum(const std::vector<SquareMatrix<T>>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  SquareMatrix<T> r(n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r(off + i, off + j) = b(i, j);
    off += b.size();
  }
  return r;
}

inline RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

/// Exact determinant by Bareiss fraction-free elimination with row pivoting.
inline Integer det_int(const IntegerMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  IntegerMatrix m(a);
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/**
 * det(xI - A) by Bareiss elimination over ℤ[x]. No pivoting is needed: the
 * k-th pivot is the k-th leading principal minor of xI - A, a monic
 * polynomial of degree k, so every division is exact by a monic divisor.
 */
inline IntegerPolynomial char_poly(const IntegerMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) throw PreconditionError("characteristic polynomial of an empty matrix");
  std::vector<IntegerPolynomial> m(n * n);
  auto at = [&](std::size_t i, std::size_t j) -> IntegerPolynomial& { return m[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      at(i, j) = IntegerPolynomial::constant(-a(i, j));
      if (i == j) at(i, j) += IntegerPolynomial::x();
    }
  IntegerPolynomial prev = IntegerPolynomial::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        at(i, j) = exact_quotient(at(k, k) * at(i, j) - at(i, k) * at(k, j), prev);
      }
    }
    prev = at(k, k);
  }
  return at(n - 1, n - 1);
}

/// Inverse over ℚ by Gauss-Jordan; throws on a singular matrix.
inline RationalMatrix inverse(const RationalMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix m(a);
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m(p, col) == 0) ++p;
    if (p == n) throw PreconditionError("matrix is singular");
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(p, j), m(col, j));
        std::swap(inv(p, j), inv(col, j));
      }
    }
    const Rational pivot = m(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) /= pivot;
      inv(col, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

/// Inverse of a matrix in GL_n(ℤ).
inline IntegerMatrix unimodular_inverse(const IntegerMatrix& a) {
  const Integer d = det_int(a);
  if (d != 1 && d != -1) throw PreconditionError("matrix is not invertible over the integers");
  const RationalMatrix inv = inverse(to_rational(a));
  IntegerMatrix r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) r(i, j) = numerator_of(inv(i, j));
  return r;
}

/**
 * Solves M v = rhs over ℚ for a square nonsingular M.
 */
inline std::vector<Rational> solve(const RationalMatrix& m, const std::vector<Rational>& rhs) {
  return inverse(m).apply(rhs);
}

}  // namespace goe

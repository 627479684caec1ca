#pragma once

// Independent brute-force oracles shared by the unit tests. Nothing here
// calls into the elimination or Sturm code under test.

#include <cstddef>
#include <random>
#include <vector>

#include "goe/exact_algebra/matrix.hpp"
#include "goe/exact_algebra/number.hpp"

namespace goe::testing {

/// Determinant by cofactor expansion along the first row.
inline Integer laplace_det(const IntegerMatrix& a) {
  const std::size_t n = a.size();
  if (n == 1) return a(0, 0);
  Integer total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (a(0, col) == 0) continue;
    IntegerMatrix minor(n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j) {
        if (j == col) continue;
        minor(i - 1, jj++) = a(i, j);
      }
    const Integer term = a(0, col) * laplace_det(minor);
    total += (col % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

inline IntegerMatrix random_matrix(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  IntegerMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
  return m;
}

/// The 4x4 ergodic, non-hyperbolic automorphism with χ = x⁴ - 2x³ + x² - 2x + 1.
inline IntegerMatrix ergodic_example() {
  return IntegerMatrix{{0, 0, 0, 1}, {-1, 0, 0, 2}, {0, -1, 0, 1}, {0, 0, -1, 2}};
}

inline IntegerMatrix cat_map() { return IntegerMatrix{{2, 1}, {1, 1}}; }

}  // namespace goe::testing

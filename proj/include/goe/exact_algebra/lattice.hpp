#pragma once

// Integer row reduction: Hermite normal form and integral kernels.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "goe/errors.hpp"
#include "goe/exact_algebra/number.hpp"

namespace goe {

using IntegerVector = std::vector<Integer>;

namespace detail {

// Unimodular row operations bringing the first `cols` columns of `rows` to
// echelon form. Returns the number of pivot rows; rows past it are zero in
// those columns. Extra columns ride along.
inline std::size_t echelonize(std::vector<IntegerVector>& rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        if (best == rows.size() || abs_value(rows[i][c]) < abs_value(rows[best][c])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        const Integer q = floor_div(rows[i][c], rows[r][c]);
        for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) {
        ++r;
        break;
      }
    }
  }
  return r;
}

}  // namespace detail

/**
 * Row-style Hermite normal form of the lattice spanned by `generators`:
 * echelon rows with positive pivots and entries above each pivot reduced
 * into [0, pivot). Zero rows are dropped. Unique for a given lattice.
 */
inline std::vector<IntegerVector> hermite_normal_form(std::vector<IntegerVector> generators) {
  if (generators.empty()) return {};
  const std::size_t cols = generators.front().size();
  for (const auto& g : generators)
    if (g.size() != cols) throw PreconditionError("generators have different lengths");
  const std::size_t rank = detail::echelonize(generators, cols);
  generators.resize(rank);
  std::size_t col = 0;
  for (std::size_t r = 0; r < rank; ++r) {
    while (generators[r][col] == 0) ++col;
    if (generators[r][col] < 0)
      for (auto& v : generators[r]) v = -v;
    for (std::size_t above = 0; above < r; ++above) {
      const Integer q = floor_div(generators[above][col], generators[r][col]);
      if (q == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) generators[above][j] -= q * generators[r][j];
    }
  }
  return generators;
}

/**
 * ℤ-basis of {v in ℤ^cols : M v = 0}, where M is given by its rows. The
 * basis comes back in Hermite normal form.
 */
inline std::vector<IntegerVector> integer_kernel(const std::vector<IntegerVector>& m_rows, std::size_t cols) {
  // Reduce [Mᵀ | I]; rows whose left block vanishes carry kernel vectors.
  const std::size_t eqs = m_rows.size();
  std::vector<IntegerVector> aug(cols, IntegerVector(eqs + cols, Integer(0)));
  for (std::size_t v = 0; v < cols; ++v) {
    for (std::size_t e = 0; e < eqs; ++e) aug[v][e] = m_rows[e][v];
    aug[v][eqs + v] = 1;
  }
  const std::size_t rank = detail::echelonize(aug, eqs);
  std::vector<IntegerVector> kernel;
  for (std::size_t i = rank; i < aug.size(); ++i) kernel.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(eqs), aug[i].end());
  return hermite_normal_form(std::move(kernel));
}

/**
 * Integer coordinates of `v` in a basis given in Hermite normal form, or
 * nullopt when v is not in the lattice.
 */
inline std::optional<IntegerVector> lattice_coordinates(const std::vector<IntegerVector>& hnf, IntegerVector v) {
  IntegerVector coords(hnf.size(), Integer(0));
  std::size_t col = 0;
  for (std::size_t r = 0; r < hnf.size(); ++r) {
    while (hnf[r][col] == 0) {
      if (v[col] != 0) return std::nullopt;
      ++col;
    }
    if (v[col] % hnf[r][col] != 0) return std::nullopt;
    const Integer q = v[col] / hnf[r][col];
    coords[r] = q;
    for (std::size_t j = col; j < v.size(); ++j) v[j] -= q * hnf[r][j];
  }
  for (const auto& x : v)
    if (x != 0) return std::nullopt;
  return coords;
}

}  // namespace goe

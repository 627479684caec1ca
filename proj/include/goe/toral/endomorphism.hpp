#pragma once

/**
 * Garden-of-Eden properties of affine maps commuting with a toral
 * automorphism f_A.
 *
 * Surjectivity, injectivity and kernel size depend only on det B. For
 * pre-injectivity (injectivity on every homoclinicity class) there are two
 * exact cases: hyperbolic A, where the homoclinicity group of 0 is a dense
 * copy of ℤⁿ and pre-injectivity is equivalent to det B ≠ 0; and ergodic A
 * with irreducible χ_A and eigenvalues on the circle, where that group is
 * trivial and every map is pre-injective. Elsewhere the answer is Unknown.
 */

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "goe/errors.hpp"
#include "goe/exact_algebra/lattice.hpp"
#include "goe/exact_algebra/matrix.hpp"
#include "goe/toral/affine_map.hpp"
#include "goe/toral/classification.hpp"

namespace goe {

enum class Tristate { False, True, Unknown };

inline std::string to_string(Tristate t) {
  switch (t) {
    case Tristate::False: return "false";
    case Tristate::True: return "true";
    default: return "unknown";
  }
}

inline Tristate to_tristate(bool b) { return b ? Tristate::True : Tristate::False; }

/// τ ∘ f_A = f_A ∘ τ, i.e. AB = BA and (A - I)c ∈ ℤⁿ.
inline bool commutes(const AffineToralMap& tau, const IntegerMatrix& a) {
  if (a.size() != tau.dim()) throw PreconditionError("map and automorphism have different dimensions");
  const Integer d = det_int(a);
  if (d != 1 && d != -1) throw PreconditionError("base matrix is not invertible over the integers");
  if (a * tau.linear() != tau.linear() * a) return false;
  const RationalVector shifted = (a - IntegerMatrix::identity(a.size())).apply(tau.translation());
  return std::all_of(shifted.begin(), shifted.end(), [](const Rational& x) { return is_integral(x); });
}

namespace detail {

inline IntegerVector flatten(const IntegerMatrix& m) { return {m.data().begin(), m.data().end()}; }

inline IntegerMatrix unflatten(const IntegerVector& v, std::size_t n) {
  IntegerMatrix m(n);
  for (std::size_t i = 0; i < n * n; ++i) m(i / n, i % n) = v[i];
  return m;
}

}  // namespace detail

/**
 * ℤ-basis of the integer matrices B with AB = BA, in Hermite normal form of
 * their row-major flattenings.
 */
inline std::vector<IntegerMatrix> commutant_basis(const IntegerMatrix& a) {
  const std::size_t n = a.size();
  // (AB - BA)_{ij} = Σ_k A_ik B_kj - B_ik A_kj as a linear form in the entries of B.
  std::vector<IntegerVector> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntegerVector row(n * n, Integer(0));
      for (std::size_t k = 0; k < n; ++k) {
        row[k * n + j] += a(i, k);
        row[i * n + k] -= a(k, j);
      }
      rows.push_back(std::move(row));
    }
  std::vector<IntegerMatrix> out;
  for (const auto& v : integer_kernel(rows, n * n)) out.push_back(detail::unflatten(v, n));
  return out;
}

/// Integer coordinates of B in a commutant basis, or nullopt if B is outside its span.
inline std::optional<IntegerVector> commutant_coordinates(const std::vector<IntegerMatrix>& basis,
                                                          const IntegerMatrix& b) {
  std::vector<IntegerVector> hnf;
  for (const auto& m : basis) hnf.push_back(detail::flatten(m));
  return lattice_coordinates(hermite_normal_form(hnf), detail::flatten(b));
}

/**
 * Brute-force verification sweep: every integer B with entries in
 * [-entry_bound, entry_bound] and AB = BA must be an integer combination of
 * the basis. Returns the number of commuting matrices seen; throws
 * std::logic_error on a miss. Cost is (2·bound + 1)^(n²).
 */
inline std::size_t verify_commutant_basis(const IntegerMatrix& a, const std::vector<IntegerMatrix>& basis,
                                          int entry_bound) {
  const std::size_t n = a.size();
  std::vector<IntegerVector> hnf_rows;
  for (const auto& m : basis) hnf_rows.push_back(detail::flatten(m));
  const auto hnf = hermite_normal_form(hnf_rows);
  std::vector<int> digits(n * n, -entry_bound);
  std::size_t seen = 0;
  while (true) {
    IntegerMatrix b(n);
    for (std::size_t i = 0; i < n * n; ++i) b(i / n, i % n) = digits[i];
    if (a * b == b * a) {
      ++seen;
      if (!lattice_coordinates(hnf, detail::flatten(b))) throw std::logic_error("commuting matrix outside the basis span");
    }
    std::size_t pos = 0;
    while (pos < digits.size() && digits[pos] == entry_bound) digits[pos++] = -entry_bound;
    if (pos == digits.size()) break;
    ++digits[pos];
  }
  return seen;
}

/**
 * All c ∈ [0,1)ⁿ with (A - I)c ∈ ℤⁿ, i.e. every translation that commutes
 * with f_A. Requires det(A - I) ≠ 0; then these are exactly the rational
 * points (A - I)⁻¹z, |det(A - I)| of them.
 */
inline std::vector<RationalVector> commuting_translations(const IntegerMatrix& a) {
  const std::size_t n = a.size();
  const IntegerMatrix shifted = a - IntegerMatrix::identity(n);
  const Integer d = abs_value(det_int(shifted));
  if (d == 0) throw PreconditionError("1 is an eigenvalue: commuting translations form a continuum");
  if (d > 4096) throw ResourceError("too many commuting translations to enumerate");
  const RationalMatrix inv = inverse(to_rational(shifted));
  // (A - I)⁻¹ eᵢ generate the group modulo ℤⁿ; close under addition.
  std::vector<RationalVector> found{RationalVector(n, Rational(0))};
  std::vector<RationalVector> generators;
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector e(n, Rational(0));
    e[i] = 1;
    RationalVector g = inv.apply(e);
    for (auto& x : g) x = frac_of(x);
    generators.push_back(std::move(g));
  }
  for (std::size_t cursor = 0; cursor < found.size(); ++cursor) {
    for (const auto& g : generators) {
      RationalVector next(n);
      for (std::size_t i = 0; i < n; ++i) next[i] = frac_of(found[cursor][i] + g[i]);
      if (std::find(found.begin(), found.end(), next) == found.end()) found.push_back(std::move(next));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

inline bool is_surjective(const AffineToralMap& tau) { return det_int(tau.linear()) != 0; }

inline bool is_injective(const AffineToralMap& tau) {
  const Integer d = det_int(tau.linear());
  return d == 1 || d == -1;
}

/// |det B| when finite; nullopt stands for an infinite kernel.
inline std::optional<Integer> kernel_cardinality(const AffineToralMap& tau) {
  const Integer d = det_int(tau.linear());
  if (d == 0) return std::nullopt;
  return abs_value(d);
}

/// Pre-injectivity of τ on (𝕋ⁿ, f_A), with the classification of A supplied.
inline Tristate is_pre_injective(const AffineToralMap& tau, const IntegerMatrix& a, const MatrixClassification& cls) {
  if (!commutes(tau, a)) throw PreconditionError("map does not commute with the automorphism");
  if (cls.is_hyperbolic) return to_tristate(det_int(tau.linear()) != 0);
  if (cls.is_ergodic && cls.char_poly_irreducible() && cls.unit_circle_roots > 0) return Tristate::True;
  return Tristate::Unknown;
}

inline Tristate is_pre_injective(const AffineToralMap& tau, const IntegerMatrix& a) {
  return is_pre_injective(tau, a, classify_matrix(a));
}

struct GoeVerdict {
  bool surjective = false;
  bool injective = false;
  Tristate pre_injective = Tristate::Unknown;
  std::optional<Integer> kernel_cardinality;  // nullopt: infinite
  bool moore_consistent = true;               // not (surjective and certainly not pre-injective)
  bool myhill_consistent = true;              // not (certainly pre-injective and not surjective)
};

inline GoeVerdict goe_verdict(const AffineToralMap& tau, const IntegerMatrix& a, const MatrixClassification& cls) {
  GoeVerdict v;
  v.pre_injective = is_pre_injective(tau, a, cls);
  v.surjective = is_surjective(tau);
  v.injective = is_injective(tau);
  v.kernel_cardinality = kernel_cardinality(tau);
  v.moore_consistent = !(v.surjective && v.pre_injective == Tristate::False);
  v.myhill_consistent = !(v.pre_injective == Tristate::True && !v.surjective);
  return v;
}

inline GoeVerdict goe_verdict(const AffineToralMap& tau, const IntegerMatrix& a) {
  return goe_verdict(tau, a, classify_matrix(a));
}

}  // namespace goe

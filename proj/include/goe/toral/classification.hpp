#pragma once

#include <set>
#include <vector>

#include "goe/exact_algebra/cyclotomic.hpp"
#include "goe/exact_algebra/factor.hpp"
#include "goe/exact_algebra/matrix.hpp"
#include "goe/exact_algebra/unit_circle.hpp"

namespace goe {

struct MatrixClassification {
  Integer det;
  bool is_invertible_over_Z = false;
  bool is_hyperbolic = false;
  bool is_ergodic = false;
  int unit_circle_roots = 0;
  std::set<unsigned> unity_divisors;
  IntegerPolynomial char_poly;
  std::vector<PolynomialFactor> factors;

  bool char_poly_irreducible() const { return factors.size() == 1 && factors.front().multiplicity == 1; }
};

/**
 * Exact spectral classification of A. Hyperbolic means A ∈ GL_n(ℤ) with no
 * eigenvalue on the unit circle; ergodic means no eigenvalue is a root of
 * unity. Throws UnsupportedDegreeError when χ_A is too large to factor.
 */
inline MatrixClassification classify_matrix(const IntegerMatrix& a,
                                             int factor_degree_bound = kDefaultFactorDegreeBound) {
  MatrixClassification out;
  out.char_poly = char_poly(a);
  out.det = det_int(a);
  out.is_invertible_over_Z = out.det == 1 || out.det == -1;
  out.factors = factor_rational(out.char_poly, factor_degree_bound);
  out.unity_divisors = root_of_unity_divisors(out.char_poly);
  out.is_ergodic = out.unity_divisors.empty();
  // Eigenvalue 0 is off the circle; only the nonzero-root part is counted.
  IntegerPolynomial nonzero_part = out.char_poly;
  while (nonzero_part[0] == 0) nonzero_part = exact_quotient(nonzero_part, IntegerPolynomial::x());
  out.unit_circle_roots = nonzero_part.degree() >= 1 ? unit_circle_root_count(nonzero_part) : 0;
  out.is_hyperbolic = out.is_invertible_over_Z && out.unit_circle_roots == 0;
  return out;
}

}  // namespace goe

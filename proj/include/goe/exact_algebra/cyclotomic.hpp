#pragma once

#include <map>
#include <set>

#include "goe/errors.hpp"
#include "goe/exact_algebra/polynomial.hpp"

namespace goe {

inline unsigned euler_phi(unsigned d) {
  unsigned result = d;
  for (unsigned p = 2; p * p <= d; ++p) {
    if (d % p != 0) continue;
    while (d % p == 0) d /= p;
    result -= result / p;
  }
  if (d > 1) result -= result / d;
  return result;
}

/// Φ_d = (x^d - 1) / ∏_{e | d, e < d} Φ_e, built bottom-up over the divisors of d.
inline IntegerPolynomial cyclotomic(unsigned d) {
  if (d == 0) throw PreconditionError("cyclotomic index must be positive");
  std::map<unsigned, IntegerPolynomial> phi;
  for (unsigned e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    IntegerPolynomial num = IntegerPolynomial::monomial(Integer(1), static_cast<int>(e)) - IntegerPolynomial::constant(1);
    for (const auto& [f, poly] : phi) {
      if (e % f == 0) num = exact_quotient(num, poly);
    }
    phi.emplace(e, std::move(num));
  }
  return phi.at(d);
}

/**
 * The d with φ(d) <= deg p for which Φ_d shares a factor with p, i.e. the
 * orders of the roots of unity among the roots of p. Empty means p has no
 * root-of-unity root.
 */
inline std::set<unsigned> root_of_unity_divisors(const IntegerPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("root-of-unity test of the zero polynomial");
  std::set<unsigned> out;
  const int n = p.degree();
  if (n < 1) return out;
  // φ(d) >= sqrt(d / 2), so φ(d) <= n forces d <= 2 n^2.
  const unsigned limit = 2u * static_cast<unsigned>(n) * static_cast<unsigned>(n) + 2u;
  for (unsigned d = 1; d <= limit; ++d) {
    if (euler_phi(d) > static_cast<unsigned>(n)) continue;
    if (poly_gcd(p, cyclotomic(d)).degree() > 0) out.insert(d);
  }
  return out;
}

}  // namespace goe

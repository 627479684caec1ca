#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "goe/exact_algebra/cyclotomic.hpp"
#include "goe/exact_algebra/factor.hpp"
#include "goe/exact_algebra/unit_circle.hpp"

using namespace goe;

namespace {

const IntegerPolynomial kErgodicChi{1, -2, 1, -2, 1};

IntegerPolynomial reconstruct(const std::vector<PolynomialFactor>& fs) {
  IntegerPolynomial p = IntegerPolynomial::constant(1);
  for (const auto& f : fs) p *= power(f.factor, static_cast<unsigned>(f.multiplicity));
  return p;
}

// Brute-force rational-root search with |num|, den <= 40.
bool has_small_rational_root(const IntegerPolynomial& p) {
  const RationalPolynomial r = to_rational(p);
  for (int den = 1; den <= 40; ++den)
    for (int num = -40; num <= 40; ++num)
      if (r(Rational(num, den)) == 0) return true;
  return false;
}

unsigned phi_by_counting(unsigned d) {
  unsigned c = 0;
  for (unsigned k = 1; k <= d; ++k) c += std::gcd(k, d) == 1 ? 1 : 0;
  return c;
}

}  // namespace

TEST(Factor, SpecExamples) {
  const auto fs = factor_rational(IntegerPolynomial{-1, 0, 0, 0, 1});
  ASSERT_EQ(fs.size(), 3u);
  EXPECT_EQ(fs[0].factor, (IntegerPolynomial{-1, 1}));
  EXPECT_EQ(fs[1].factor, (IntegerPolynomial{1, 1}));
  EXPECT_EQ(fs[2].factor, (IntegerPolynomial{1, 0, 1}));

  const auto erg = factor_rational(kErgodicChi);
  ASSERT_EQ(erg.size(), 1u);
  EXPECT_EQ(erg[0].factor, kErgodicChi);
  EXPECT_EQ(erg[0].multiplicity, 1);

  const auto sq = factor_rational(IntegerPolynomial{1, -2, 1});
  ASSERT_EQ(sq.size(), 1u);
  EXPECT_EQ(sq[0].factor, (IntegerPolynomial{-1, 1}));
  EXPECT_EQ(sq[0].multiplicity, 2);
}

TEST(Factor, DegreeBoundEnforced) {
  const IntegerPolynomial p = IntegerPolynomial::monomial(Integer(1), 9) - IntegerPolynomial::constant(2);
  EXPECT_THROW(factor_rational(p), UnsupportedDegreeError);
  EXPECT_NO_THROW(factor_rational(p, 9));
  EXPECT_THROW(factor_rational(IntegerPolynomial()), PreconditionError);
}

TEST(Factor, QuarticWithoutRationalRootsSplitsIntoQuadratics) {
  // (x^2 + 1)(x^2 - 2) has no linear factor; Kronecker must find both halves.
  const auto fs = factor_rational(IntegerPolynomial{1, 0, 1} * IntegerPolynomial{-2, 0, 1});
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].factor, (IntegerPolynomial{-2, 0, 1}));
  EXPECT_EQ(fs[1].factor, (IntegerPolynomial{1, 0, 1}));
}

TEST(Factor, RandomProductsReconstructAndFactorsAreIrreducible) {
  const std::vector<IntegerPolynomial> pool{
      {-1, 1}, {2, 1}, {-1, 2}, {1, 0, 1}, {-2, 0, 1}, {1, 1, 1}, {1, -3, 1}, {-2, 0, 0, 1}, {-1, -1, 0, 1},
      {3, 0, 2}, {1, -2, 1, -2, 1}};
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> scale(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    IntegerPolynomial p = IntegerPolynomial::constant(scale(rng));
    while (true) {
      const IntegerPolynomial& f = pool[pick(rng)];
      if (p.degree() + f.degree() > 8) break;
      p *= f;
    }
    if (p.degree() < 1) continue;
    const auto fs = factor_rational(p);
    EXPECT_EQ(reconstruct(fs), primitive_part(p)) << to_string(p);
    for (const auto& f : fs) {
      EXPECT_EQ(content(f.factor), 1);
      if (f.factor.degree() >= 2 && f.factor.degree() <= 3) {
        EXPECT_FALSE(has_small_rational_root(f.factor));
      }
      // An irreducible f meets x^k - a nontrivially only if it divides it.
      for (int k = 1; k <= 4; ++k)
        for (int a = -4; a <= 4; ++a) {
          const IntegerPolynomial probe = IntegerPolynomial::monomial(Integer(1), k) - IntegerPolynomial::constant(a);
          if (poly_gcd(f.factor, probe).degree() > 0) {
            EXPECT_TRUE(divides(f.factor, probe)) << to_string(f.factor);
          }
        }
    }
  }
}

TEST(Cyclotomic, SpecExamples) {
  EXPECT_EQ(cyclotomic(1), (IntegerPolynomial{-1, 1}));
  EXPECT_EQ(cyclotomic(4), (IntegerPolynomial{1, 0, 1}));
  EXPECT_EQ(cyclotomic(6), (IntegerPolynomial{1, -1, 1}));
  EXPECT_THROW(cyclotomic(0), PreconditionError);
}

TEST(Cyclotomic, DegreeIsTotientAndDividesXdMinusOne) {
  for (unsigned d = 1; d <= 30; ++d) {
    const IntegerPolynomial c = cyclotomic(d);
    EXPECT_EQ(static_cast<unsigned>(c.degree()), phi_by_counting(d)) << d;
    EXPECT_EQ(euler_phi(d), phi_by_counting(d));
    const IntegerPolynomial xd = IntegerPolynomial::monomial(Integer(1), static_cast<int>(d)) - IntegerPolynomial::constant(1);
    EXPECT_TRUE(divides(c, xd)) << d;
  }
}

TEST(RootsOfUnity, SpecExamples) {
  EXPECT_EQ(root_of_unity_divisors(IntegerPolynomial{-1, 1}), (std::set<unsigned>{1}));
  EXPECT_TRUE(root_of_unity_divisors(kErgodicChi).empty());
  EXPECT_EQ(root_of_unity_divisors(IntegerPolynomial{1, 0, 1}), (std::set<unsigned>{4}));
  EXPECT_EQ(root_of_unity_divisors(IntegerPolynomial{-1, 0, 0, 0, 0, 0, 1}), (std::set<unsigned>{1, 2, 3, 6}));
}

// The ergodic example has circle roots that are not roots of unity.
TEST(RootsOfUnity, CircleRootsWithoutRootsOfUnity) {
  EXPECT_TRUE(root_of_unity_divisors(kErgodicChi).empty());
  EXPECT_EQ(unit_circle_root_count(kErgodicChi), 2);
}

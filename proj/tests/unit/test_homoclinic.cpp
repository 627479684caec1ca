#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "goe/homoclinic.hpp"
#include "oracles.hpp"

using namespace goe;
using goe::testing::cat_map;
using goe::testing::ergodic_example;

namespace {

double d(const Real& x) { return x.convert_to<double>(); }

IntegerMatrix companion(const IntegerPolynomial& monic) {
  const std::size_t n = static_cast<std::size_t>(monic.degree());
  IntegerMatrix c(n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -monic[i];
  return c;
}

std::vector<IntegerMatrix> hyperbolic_family() {
  return {cat_map(),
          cat_map() * cat_map(),
          IntegerMatrix{{1, 1}, {1, 2}},
          IntegerMatrix{{3, 1}, {2, 1}},
          companion(IntegerPolynomial{-1, -1, 0, 1}),
          direct_sum<Integer>({cat_map(), IntegerMatrix{{3, 1}, {2, 1}}}),
          companion(IntegerPolynomial{1, -3, 1} * IntegerPolynomial{1, -3, 1})};
}

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

// A is symmetric, so P_s is the orthogonal projection onto the stable eigenline (1, -φ).
double cat_stable_projection(std::size_t i, std::size_t j) {
  const double v[2] = {1.0, -kPhi};
  return v[i] * v[j] / (1.0 + kPhi * kPhi);
}

// Within tol of a point of (1/q)ℤⁿ for some q ≤ max_den.
bool near_rational_point(const RealVector& x, int max_den, double tol) {
  for (int q = 1; q <= max_den; ++q) {
    bool all = true;
    for (const auto& v : x) all = all && d(dist_to_integer(v * q)) / q <= tol;
    if (all) return true;
  }
  return false;
}

}  // namespace

TEST(Roots, ErgodicExampleMatchesClosedForms) {
  const auto roots = locate_roots(IntegerPolynomial{1, -2, 1, -2, 1});
  ASSERT_EQ(roots.size(), 4u);
  const double s2 = std::sqrt(2.0);
  const double re12 = 0.5 - 1 / s2, im12 = std::sqrt(std::sqrt(8.0) + 1) / 2;
  const double l3 = 0.5 + 1 / s2 - std::sqrt(std::sqrt(8.0) - 1) / 2;
  const double l4 = 0.5 + 1 / s2 + std::sqrt(std::sqrt(8.0) - 1) / 2;
  EXPECT_NEAR(d(roots[0].value.real()), l3, 1e-12);
  EXPECT_EQ(roots[0].side, DiskSide::Inside);
  EXPECT_NEAR(d(roots[1].value.real()), re12, 1e-12);
  EXPECT_NEAR(d(roots[1].value.imag()), -im12, 1e-12);
  EXPECT_NEAR(d(roots[2].value.imag()), im12, 1e-12);
  EXPECT_EQ(roots[1].side, DiskSide::On);
  EXPECT_NEAR(d(abs(roots[2].value)), 1.0, 1e-15);
  EXPECT_NEAR(d(roots[3].value.real()), l4, 1e-12);
  EXPECT_EQ(roots[3].side, DiskSide::Outside);
}

TEST(Roots, MultiplicityAndZeroRoot) {
  const auto roots = locate_roots(IntegerPolynomial{0, 1} * power(IntegerPolynomial{1, 0, 1}, 2));
  ASSERT_EQ(roots.size(), 3u);
  EXPECT_EQ(roots[0].side, DiskSide::Inside);
  EXPECT_EQ(roots[1].multiplicity, 2);
  EXPECT_EQ(roots[2].side, DiskSide::On);
  EXPECT_THROW(locate_roots(IntegerPolynomial{3}), PreconditionError);
}

TEST(Splitting, CatMapMatchesClosedForm) {
  const SpectralSplit s = stable_splitting(cat_map());
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) EXPECT_NEAR(d(s.p_s(i, j)), cat_stable_projection(i, j), 1e-12);
  EXPECT_LT(d(s.residual), 1e-40);
  EXPECT_GT(d(s.contraction_rate), (3 - std::sqrt(5.0)) / 2);
  EXPECT_LT(d(s.contraction_rate), 1.0);
}

TEST(Splitting, InverseSwapsStableAndUnstable) {
  const SpectralSplit s = stable_splitting(cat_map());
  const SpectralSplit t = stable_splitting(unimodular_inverse(cat_map()));
  EXPECT_LT(d((s.p_s - t.p_u).max_abs_entry()), 1e-30);
  EXPECT_LT(d((s.p_u - t.p_s).max_abs_entry()), 1e-30);
}

TEST(Splitting, BlockDiagonalSumIsBlockwise) {
  const SpectralSplit s = stable_splitting(cat_map());
  const SpectralSplit b = stable_splitting(direct_sum<Integer>({cat_map(), cat_map()}));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const double expect = (i / 2 == j / 2) ? d(s.p_s(i % 2, j % 2)) : 0.0;
      EXPECT_NEAR(d(b.p_s(i, j)), expect, 1e-30);
    }
}

TEST(Splitting, ProjectionIdentitiesForHyperbolicFamily) {
  for (const auto& a : hyperbolic_family()) {
    const SpectralSplit s = stable_splitting(a);
    const RealMatrix id = RealMatrix::identity(a.size()), ar(a);
    EXPECT_LT(d((s.p_s * s.p_s - s.p_s).max_abs_entry()), 1e-9);
    EXPECT_LT(d((s.p_s * s.p_u).max_abs_entry()), 1e-9);
    EXPECT_LT(d((s.p_s + s.p_u - id).max_abs_entry()), 1e-9);
    EXPECT_LT(d((ar * s.p_s - s.p_s * ar).max_abs_entry()), 1e-9);
  }
}

TEST(Splitting, RejectsNonHyperbolic) {
  EXPECT_THROW(stable_splitting(ergodic_example()), PreconditionError);
  EXPECT_THROW(stable_splitting(IntegerMatrix::identity(2)), PreconditionError);
}

TEST(HomoclinicPoint, ZeroAndUnitIndex) {
  const SpectralSplit s = stable_splitting(cat_map());
  const auto h0 = homoclinic_point(s, {0, 0});
  EXPECT_EQ(d(h0.point[0]), 0.0);
  EXPECT_EQ(d(h0.point[1]), 0.0);
  const auto h1 = homoclinic_point(s, {1, 0});
  for (std::size_t i = 0; i < 2; ++i) {
    const double x = cat_stable_projection(i, 0);
    EXPECT_NEAR(d(h1.point[i]), x - std::floor(x), 1e-12);
  }
  EXPECT_THROW(homoclinic_point(s, {1, 0, 0}), PreconditionError);
  EXPECT_THROW(homoclinic_point(s, {Integer(2'000'000), 0}), PreconditionError);
}

TEST(HomoclinicPoint, Additive) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> dist(-50, 50);
  for (const auto& a : hyperbolic_family()) {
    const SpectralSplit s = stable_splitting(a);
    for (int trial = 0; trial < 20; ++trial) {
      IntegerVector k1, k2, k12;
      for (std::size_t i = 0; i < a.size(); ++i) {
        k1.push_back(dist(rng));
        k2.push_back(dist(rng));
        k12.push_back(k1.back() + k2.back());
      }
      const auto h1 = homoclinic_point(s, k1), h2 = homoclinic_point(s, k2), h12 = homoclinic_point(s, k12);
      RealVector diff;
      for (std::size_t i = 0; i < a.size(); ++i) diff.push_back(h1.point[i] + h2.point[i] - h12.point[i]);
      EXPECT_LT(d(torus_norm(diff)), 1e-6);
    }
  }
}

TEST(HomoclinicPoint, AvoidsSmallDenominatorRationalPoints) {
  const SpectralSplit s = stable_splitting(cat_map());
  for (int i = -10; i <= 10; ++i)
    for (int j = -10; j <= 10; ++j) {
      if (i == 0 && j == 0) continue;
      EXPECT_FALSE(near_rational_point(homoclinic_point(s, {i, j}).point, 16, 1e-6)) << i << "," << j;
    }
}

TEST(Decay, SpecExamples) {
  const SpectralSplit s = stable_splitting(cat_map());
  EXPECT_TRUE(verify_decay(s, homoclinic_point(s, {0, 0}), 25));
  EXPECT_TRUE(verify_decay(cat_map(), homoclinic_point(s, {1, 0}), 20, 1e-6));
  const HomoclinicSample periodic{{0, 0}, {Real(1) / 3, Real(0)}};
  EXPECT_FALSE(verify_decay(s, periodic, 20, 1e-6));
}

TEST(Decay, HoldsAcrossFamilyAtDefaultHorizon) {
  for (const auto& a : hyperbolic_family()) {
    const SpectralSplit s = stable_splitting(a);
    IntegerVector k(a.size(), Integer(0));
    k[0] = 3;
    k.back() -= 2;
    const DecayCheck c = check_decay(s, homoclinic_point(s, k), kDefaultHorizon);
    EXPECT_TRUE(c.holds) << format_matrix(a);
    EXPECT_LT(d(c.forward.back()), 0.05);  // slowest contraction here is |λ| ≈ 0.869 (x³ - x - 1)
    EXPECT_LT(d(c.backward.back()), 0.05);
  }
}

TEST(Decay, Rejections) {
  const SpectralSplit s = stable_splitting(cat_map());
  EXPECT_THROW(verify_decay(s, homoclinic_point(s, {1, 0}), 0), PreconditionError);
  EXPECT_THROW(verify_decay(s, homoclinic_point(s, {1, 0}), 150), ResourceError);
}

TEST(Coverage, TrivialAndMonotone) {
  const SpectralSplit s = stable_splitting(cat_map());
  EXPECT_DOUBLE_EQ(density_coverage(s, 0, 32), 1.0 / 1024);
  double last = 0;
  for (std::int64_t k : {0, 1, 5, 20, 60, 200}) {
    const double c = density_coverage(s, k, 32);
    EXPECT_GE(c, last);
    last = c;
  }
  EXPECT_GE(last, 0.99);
  EXPECT_THROW(density_coverage(s, -1, 32), PreconditionError);
}

TEST(Oracle, SpecExamples) {
  const SpectralSplit s = stable_splitting(cat_map());
  EXPECT_TRUE(pre_injectivity_oracle(s, AffineToralMap(IntegerMatrix::scalar(2, 2)), 20).pre_injective);
  const auto zero = pre_injectivity_oracle(s, AffineToralMap(IntegerMatrix(2)), 5);
  EXPECT_FALSE(zero.pre_injective);
  ASSERT_TRUE(zero.witness.has_value());
  EXPECT_TRUE(pre_injectivity_oracle(s, AffineToralMap(IntegerMatrix::identity(2)), 20).pre_injective);
  EXPECT_THROW(pre_injectivity_oracle(s, AffineToralMap(IntegerMatrix{{1, 1}, {0, 1}}), 5), PreconditionError);
}

TEST(Oracle, FindsKernelOfSingularBlockMap) {
  const IntegerMatrix a = direct_sum<Integer>({cat_map(), IntegerMatrix{{3, 1}, {2, 1}}});
  const SpectralSplit s = stable_splitting(a);
  const IntegerMatrix b = direct_sum<Integer>({cat_map(), IntegerMatrix(2)});
  const auto r = pre_injectivity_oracle(s, AffineToralMap(b, {0, 0, Rational(1, 2), 0}), 3);
  EXPECT_FALSE(r.pre_injective);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ((*r.witness)[0], 0);
  EXPECT_EQ((*r.witness)[1], 0);
}

TEST(HomoclinicJson, SampleLine) {
  const SpectralSplit s = stable_splitting(cat_map());
  const auto j = to_json(homoclinic_point(s, {2, -1}));
  EXPECT_EQ(j["k"], nlohmann::json::array({2, -1}));
  EXPECT_EQ(j["point"].size(), 2u);
  EXPECT_EQ(coverage_to_json(3, 32, 0.5)["grid"], 32);
}

#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "sgb/params.hpp"

using namespace sgb;

TEST(Params, DefaultsAreTheUnitSphere) {
  const CurvatureBounds cb = CurvatureBounds::unit_sphere(3);
  EXPECT_EQ(cb.n, 3);
  EXPECT_EQ(cb.k, 3.0);
  EXPECT_EQ(cb.K, 1.0);
  EXPECT_NO_THROW(validate(cb));
}

TEST(Params, RejectsBadAmbientData) {
  EXPECT_THROW(validate(CurvatureBounds{0, 1, 1}), ValidationError);
  EXPECT_THROW(validate(CurvatureBounds{2, 0, 1}), ValidationError);
  EXPECT_THROW(validate(CurvatureBounds{2, 1, -1}), ValidationError);
  EXPECT_THROW(validate(CurvatureBounds{2, NAN, 1}), ValidationError);
}

TEST(Params, RejectsBadHypersurfaceData) {
  EXPECT_THROW(validate(HypersurfaceData{-1, 1, 1}, 2), ValidationError);
  EXPECT_THROW(validate(HypersurfaceData{0, -1, 1}, 2), ValidationError);
  EXPECT_THROW(validate(HypersurfaceData{0, 1, 0}, 2), ValidationError);
  // Cauchy: H^2 <= n S.
  EXPECT_THROW(validate(HypersurfaceData{2.1, 2, 1}, 2), ValidationError);
  EXPECT_NO_THROW(validate(HypersurfaceData{2, 2, 1}, 2));
}

TEST(Params, CauchyMessageNamesTheInvariant) {
  try {
    validate(HypersurfaceData{3, 1, 1}, 2);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("Cauchy"), std::string::npos);
  }
}

TEST(Params, TOfRExamples) {
  // sqrt(S) tan(sqrt(K) R) / sqrt(K); values from tests/oracles/compute_expected.py
  const CurvatureBounds cb = CurvatureBounds::unit_sphere(2);
  RollParams rp = t_of_R(cb, {0.0, 2.0, std::numbers::pi / 4});
  EXPECT_NEAR(rp.t_R, 1.414213562373095, 1e-14);
  EXPECT_EQ(rp.r, 1.0);
  rp = t_of_R(cb, {0.58333, 2.3403, 0.6435});
  EXPECT_NEAR(rp.t_R, 1.1473502813850235, 1e-13);
  rp = t_of_R(cb, {0.0, 0.01, 0.3});
  EXPECT_LT(rp.t_R, 1.0);
  EXPECT_EQ(rp.r, rp.t_R);
}

TEST(Params, TOfRErrors) {
  const CurvatureBounds cb = CurvatureBounds::unit_sphere(2);
  EXPECT_THROW(t_of_R(cb, {0.0, 0.0, 1.0}), DegenerateError);
  EXPECT_THROW(t_of_R(cb, {0.0, 1.0, std::numbers::pi / 2}), DomainError);
  EXPECT_THROW(t_of_R(CurvatureBounds{2, 2, 4}, {0.0, 1.0, 0.8}), DomainError);
}

TEST(Params, RoundTripProperty) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const CurvatureBounds cb{1 + static_cast<int>(u(rng) * 6), 1.0, std::exp(4 * u(rng) - 2)};
    const double S = std::exp(8 * u(rng) - 4);
    const double R = (0.01 + 0.98 * u(rng)) * std::numbers::pi / 2 / std::sqrt(cb.K);
    const RollParams rp = t_of_R(cb, {0.0, S, R});
    EXPECT_NEAR(R_of_t(cb, S, rp.t_R), R, 1e-12 * std::max(1.0, R));
    EXPECT_LE(rp.r, 1.0);
  }
}

TEST(Params, RollingThreshold) {
  const CurvatureBounds cb = CurvatureBounds::unit_sphere(2);
  EXPECT_NEAR(rolling_threshold(cb, 2.0), 0.33983690945412194, 1e-14);
  EXPECT_TRUE(rolling_condition_holds(cb, {0.0, 2.0, 0.34}));
  EXPECT_FALSE(rolling_condition_holds(cb, {0.0, 2.0, 0.3398}));
  EXPECT_THROW(rolling_condition_holds(cb, {0.0, 0.0, 1.0}), DegenerateError);
}

TEST(Params, ThresholdIsRofOneHalf) {
  const CurvatureBounds cb{3, 2.0, 1.7};
  for (double S : {0.01, 0.5, 3.0, 40.0}) EXPECT_NEAR(rolling_threshold(cb, S), R_of_t(cb, S, 0.5), 1e-15);
}

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "sgb/families.hpp"

using namespace sgb;

TEST(Families, UnitSphereVolumes) {
  EXPECT_NEAR(vol_unit_sphere(1), 2 * std::numbers::pi, 1e-14);
  EXPECT_NEAR(vol_unit_sphere(2), 4 * std::numbers::pi, 1e-14);
  EXPECT_NEAR(vol_unit_sphere(3), 2 * std::numbers::pi * std::numbers::pi, 1e-13);
}

TEST(Families, GeodesicSphere) {
  const double rho = std::numbers::pi / 3;
  const FamilyPoint p = geodesic_sphere_data(rho);
  const double cot = 1.0 / std::sqrt(3.0);
  EXPECT_NEAR(p.H_sigma, 2 * cot, 1e-15);
  EXPECT_NEAR(p.S_sigma, 2 * cot * cot, 1e-15);
  EXPECT_NEAR(p.lambda1, 8.0 / 3.0, 1e-14);
  EXPECT_NEAR(p.volume, 3 * std::numbers::pi, 1e-14);
  EXPECT_EQ(p.roll_inner, rho);
  EXPECT_EQ(p.roll_outer, std::numbers::pi / 2);
  EXPECT_EQ(p.roll(), rho);
}

TEST(Families, EquatorIsTotallyGeodesic) {
  const FamilyPoint p = geodesic_sphere_data(std::numbers::pi / 2);
  EXPECT_EQ(p.H_sigma, 0.0);
  EXPECT_EQ(p.S_sigma, 0.0);
  EXPECT_EQ(p.lambda1, 2.0);
  EXPECT_EQ(p.roll(), std::numbers::pi / 2);
}

TEST(Families, CliffordTorus) {
  const FamilyPoint p = clifford_torus_data();
  EXPECT_EQ(p.H_sigma, 0.0);
  EXPECT_EQ(p.S_sigma, 2.0);
  EXPECT_EQ(p.lambda1, 2.0);
  EXPECT_NEAR(p.volume, 2 * std::numbers::pi * std::numbers::pi, 1e-13);
  EXPECT_EQ(p.roll(), std::numbers::pi / 4);
}

TEST(Families, ProductTorus) {
  const FamilyPoint p = product_torus_data(0.6);
  EXPECT_NEAR(p.H_sigma, 0.58333333333333333, 1e-15);
  EXPECT_NEAR(p.S_sigma, 2.3402777777777778, 1e-15);
  EXPECT_NEAR(p.lambda1, 1.5625, 1e-15);
  EXPECT_NEAR(p.roll(), 0.64350110879328439, 1e-15);
  EXPECT_NEAR(p.roll_inner + p.roll_outer, std::numbers::pi / 2, 1e-15);
}

TEST(Families, TorusCurvatureIdentities) {
  // Principal curvatures b/a and -a/b.
  for (double a = 0.1; a < 0.95; a += 0.05) {
    const double b = std::sqrt(1 - a * a);
    const FamilyPoint p = product_torus_data(a);
    EXPECT_NEAR(p.H_sigma, std::abs(b / a - a / b), 1e-12);
    EXPECT_NEAR(p.S_sigma, b * b / (a * a) + a * a / (b * b), 1e-12);
    EXPECT_LE(p.H_sigma * p.H_sigma, 2 * p.S_sigma);
    EXPECT_NEAR(p.S_sigma - p.H_sigma * p.H_sigma, 2.0, 1e-9);  // k1 k2 = -1
  }
}

TEST(Families, Errors) {
  EXPECT_THROW(geodesic_sphere_data(0.0), DomainError);
  EXPECT_THROW(geodesic_sphere_data(2.0), DomainError);
  EXPECT_THROW(product_torus_data(0.0), DomainError);
  EXPECT_THROW(product_torus_data(1.0), DomainError);
  EXPECT_THROW(vol_unit_sphere(0), DomainError);
}

TEST(Families, Dispatch) {
  EXPECT_EQ(family_data(Family::ProductTorus, 0.6).lambda1, product_torus_data(0.6).lambda1);
  EXPECT_EQ(family_name(Family::GeodesicSphere), "sphere");
  EXPECT_EQ(family_name(Family::ProductTorus), "torus");
}

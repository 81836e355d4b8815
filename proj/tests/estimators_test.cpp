#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "sgb/curvature.hpp"
#include "sgb/families.hpp"
#include "sgb/rolling_radius.hpp"

using namespace sgb;

TEST(Curvature, SphereLogMap) {
  const Vec4 p = Vec4::UnitX(), q = Vec4(std::cos(0.3), std::sin(0.3), 0, 0);
  const Vec4 u = sphere_log(p, q);
  EXPECT_NEAR(u.norm(), 0.3, 1e-15);
  EXPECT_NEAR(u.dot(p), 0.0, 1e-15);
  EXPECT_NEAR(u[1], 0.3, 1e-15);
}

TEST(Curvature, NormalsAreUnitTangentAndOutward) {
  const TriMesh m = mesh_geodesic_sphere(1.0, 3);
  const std::vector<Vec4> n = vertex_normals(m, build_topology(m));
  for (std::size_t i = 0; i < n.size(); ++i) {
    EXPECT_NEAR(n[i].norm(), 1.0, 1e-12);
    EXPECT_NEAR(n[i].dot(m.vertices[i]), 0.0, 1e-12);
    EXPECT_LT(n[i].dot(Vec4::UnitW()), 0.0);
  }
}

TEST(Curvature, GeodesicSphere) {
  for (double rho : {0.6, std::numbers::pi / 3, 1.3}) {
    const FamilyPoint p = geodesic_sphere_data(rho);
    const CurvatureEstimate e = estimate_curvature(mesh_geodesic_sphere(rho, 4));
    EXPECT_NEAR(e.max_abs_H / p.H_sigma, 1.0, 0.01) << rho;
    EXPECT_NEAR(e.max_S / p.S_sigma, 1.0, 0.02) << rho;
  }
}

TEST(Curvature, EquatorIsFlat) {
  const CurvatureEstimate e = estimate_curvature(mesh_geodesic_sphere(std::numbers::pi / 2, 3));
  EXPECT_LT(e.max_abs_H, 1e-10);
  EXPECT_LT(e.max_S, 1e-10);
}

TEST(Curvature, ProductTorus) {
  const FamilyPoint p = product_torus_data(0.6);
  const CurvatureEstimate e = estimate_curvature(mesh_product_torus(0.6, 96, 96));
  EXPECT_NEAR(e.max_abs_H / p.H_sigma, 1.0, 0.01);
  EXPECT_NEAR(e.max_S / p.S_sigma, 1.0, 0.01);
  // Sign of H follows the orientation: constant over the surface.
  for (double h : e.H) EXPECT_GT(h * e.H.front(), 0.0);
}

TEST(RollingRadius, Families) {
  struct Case {
    TriMesh mesh;
    Side side;
    double exact;
  };
  const double a = 0.6;
  const Case cases[] = {
      {mesh_product_torus(a, 96, 96), Side::outer, std::numbers::pi / 2 - std::acos(a)},
      {mesh_product_torus(a, 96, 96), Side::inner, std::acos(a)},
      {mesh_product_torus(std::sqrt(0.5), 96, 96), Side::outer, std::numbers::pi / 4},
      {mesh_geodesic_sphere(1.2, 4), Side::inner, 1.2},
      {mesh_geodesic_sphere(0.9, 4), Side::outer, std::numbers::pi / 2},
      {mesh_geodesic_sphere(std::numbers::pi / 2, 4), Side::inner, std::numbers::pi / 2},
  };
  for (const Case& c : cases) {
    const RollingRadiusEstimate r = estimate_rolling_radius(c.mesh, c.side, 48);
    EXPECT_NEAR(r.radius / c.exact, 1.0, 0.02) << c.exact;
    EXPECT_GE(r.worst_vertex, 0);
    EXPECT_GT(r.tol_geo, 0.0);
  }
}

TEST(RollingRadius, Errors) {
  TriMesh m = mesh_geodesic_sphere(1.0, 2);
  EXPECT_THROW(estimate_rolling_radius(m, Side::inner, 8), DomainError);
  std::swap(m.triangles[5][1], m.triangles[5][2]);
  EXPECT_THROW(estimate_rolling_radius(m, Side::inner, 64), OrientationError);
}

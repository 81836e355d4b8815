#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "sgb/laplacian.hpp"
#include "sgb/mesh.hpp"

using namespace sgb;

namespace {

// Regular tetrahedron on the great 2-sphere x4 = 0: four equilateral faces.
TriMesh tetrahedron() {
  TriMesh m;
  const double s = 1.0 / std::sqrt(3.0);
  m.vertices = {Vec4(s, s, s, 0), Vec4(s, -s, -s, 0), Vec4(-s, s, -s, 0), Vec4(-s, -s, s, 0)};
  m.triangles = {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
  return m;
}

}  // namespace

TEST(Laplacian, HeronMatchesCrossProduct) {
  EXPECT_NEAR(heron_area(3, 4, 5), 6.0, 1e-14);
  EXPECT_NEAR(heron_area(1, 1, 1), std::sqrt(3.0) / 4, 1e-16);
  // Needle triangle: the naive semi-perimeter form loses digits here.
  const double a = 1.0, b = 1.0, c = 1e-7;
  const double exact = 0.5 * c * std::sqrt(1.0 - 0.25 * c * c);
  EXPECT_NEAR(heron_area(a, b, c) / exact, 1.0, 1e-12);
  EXPECT_EQ(heron_area(1, 2, 3), 0.0);
}

TEST(Laplacian, EquilateralWeights) {
  const TriMesh m = tetrahedron();
  ASSERT_NO_THROW(validate_mesh(m));
  const SparseSym L = cotan_stiffness(m);
  // Each edge sees two 60 degree angles: 2 x (-cot(60)/2) = 2 x -1/(2 sqrt 3).
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j) {
        EXPECT_NEAR(L.matrix.coeff(i, j), 2.0 * (-1.0 / (2.0 * std::sqrt(3.0))), 1e-14);
      }
  const DiagMass M = lumped_mass(m);
  const double face = std::sqrt(3.0) / 4 * 8.0 / 3.0;
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(M.weights[i], face, 1e-14);
}

TEST(Laplacian, RowSumsVanishAndSymmetric) {
  for (const TriMesh& m : {mesh_geodesic_sphere(0.9, 3), mesh_product_torus(0.6, 20, 14)}) {
    const SparseSym L = cotan_stiffness(m);
    const Eigen::VectorXd ones = Eigen::VectorXd::Ones(L.dimension());
    EXPECT_LE((L.matrix * ones).cwiseAbs().maxCoeff(), 1e-13);
    const Eigen::SparseMatrix<double> T = L.matrix.transpose();
    EXPECT_LE((Eigen::SparseMatrix<double>(L.matrix) - T).norm(), 1e-13);
  }
}

TEST(Laplacian, PositiveSemidefinite) {
  const SparseSym L = cotan_stiffness(mesh_geodesic_sphere(1.1, 2));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es{Eigen::MatrixXd(L.matrix)};
  EXPECT_GE(es.eigenvalues().minCoeff(), -1e-12);
  EXPECT_NEAR(es.eigenvalues()[0], 0.0, 1e-12);
  EXPECT_GT(es.eigenvalues()[1], 1e-3);
}

TEST(Laplacian, AreasConverge) {
  const double rho = std::numbers::pi / 3;
  const double exact = 4 * std::numbers::pi * std::sin(rho) * std::sin(rho);
  double prev_err = 0.0;
  for (int level = 2; level <= 5; ++level) {
    const TriMesh m = mesh_geodesic_sphere(rho, level);
    const double area = surface_area(m);
    EXPECT_NEAR(lumped_mass(m).weights.sum(), area, 1e-12 * area);
    const double err = std::abs(area - exact) / exact;
    if (level >= 5) {
      EXPECT_LT(err, 1e-3);
    }
    if (level > 2) {
      EXPECT_NEAR(std::log2(prev_err / err), 2.0, 0.15);  // second order in h
    }
    prev_err = err;
  }
  const double torus = surface_area(mesh_product_torus(0.6, 128, 128));
  EXPECT_NEAR(torus / (4 * std::numbers::pi * std::numbers::pi * 0.48), 1.0, 1e-3);
}

TEST(Laplacian, RejectsDegenerateTriangles) {
  TriMesh m = tetrahedron();
  m.vertices[3] = m.vertices[0];
  EXPECT_THROW(cotan_stiffness(m), GeometryError);
}

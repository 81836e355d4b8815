#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "sgb/eigensolver.hpp"
#include "sgb/laplacian.hpp"
#include "sgb/mesh.hpp"

using namespace sgb;

namespace {

struct Operators {
  SparseSym L;
  DiagMass M;
};

Operators assemble(const TriMesh& m) { return {cotan_stiffness(m), lumped_mass(m)}; }

SparseSym sparse(const Eigen::MatrixXd& A) {
  SparseSym s;
  s.matrix = A.sparseView();
  return s;
}

}  // namespace

TEST(Eigensolver, TwoByTwo) {
  Eigen::MatrixXd A(2, 2);
  A << 1, -1, -1, 1;
  DiagMass M{Eigen::VectorXd::Ones(2)};
  EXPECT_NEAR(smallest_nonzero_eig(sparse(A), M).lambda1, 2.0, 1e-12);
  EXPECT_NEAR(dense_eig_oracle(sparse(A), M)[1], 2.0, 1e-14);
}

TEST(Eigensolver, PathGraphClosedForm) {
  // Path Laplacian: eigenvalues 2 - 2 cos(k pi / n).
  const int n = 30;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    A(i, i) += 1, A(i + 1, i + 1) += 1;
    A(i, i + 1) = A(i + 1, i) = -1;
  }
  const DiagMass M{Eigen::VectorXd::Ones(n)};
  const double exact = 2 - 2 * std::cos(std::numbers::pi / n);
  EXPECT_NEAR(smallest_nonzero_eig(sparse(A), M).lambda1 / exact, 1.0, 1e-8);
  const Eigen::VectorXd ev = dense_eig_oracle(sparse(A), M);
  for (int k = 0; k < n; ++k) EXPECT_NEAR(ev[k], 2 - 2 * std::cos(k * std::numbers::pi / n), 1e-12);
}

TEST(Eigensolver, SparseMatchesDense) {
  for (const TriMesh& m : {mesh_geodesic_sphere(1.0, 2), mesh_product_torus(0.6, 12, 12),
                           mesh_product_torus(std::sqrt(0.5), 14, 10), mesh_geodesic_sphere(std::numbers::pi / 2, 2)}) {
    const Operators op = assemble(m);
    const double sparse_l = smallest_nonzero_eig(op.L, op.M).lambda1;
    const double dense_l = dense_eig_oracle(op.L, op.M)[1];
    EXPECT_LE(std::abs(sparse_l - dense_l) / dense_l, 1e-8);
  }
}

TEST(Eigensolver, ResultInvariants) {
  const Operators op = assemble(mesh_geodesic_sphere(1.1, 3));
  const EigenResult r = smallest_nonzero_eig(op.L, op.M);
  const Eigen::VectorXd& x = r.vector;
  const double mnorm2 = x.dot(op.M.weights.cwiseProduct(x));
  EXPECT_NEAR(mnorm2, 1.0, 1e-12);
  EXPECT_NEAR(x.dot(op.L.matrix * x) / mnorm2, r.lambda1, 1e-8 * r.lambda1);
  EXPECT_LE(std::abs(op.M.weights.dot(x)), 1e-10 * std::sqrt(mnorm2));
  EXPECT_LE(r.residual, 1e-8);
  EXPECT_GT(r.iterations, 0);
}

TEST(Eigensolver, ScalingBehaviour) {
  const Operators op = assemble(mesh_product_torus(0.6, 16, 16));
  const double base = smallest_nonzero_eig(op.L, op.M).lambda1;
  SparseSym L2 = op.L;
  L2.matrix *= 7.5;
  DiagMass M2 = op.M;
  M2.weights *= 7.5;
  EXPECT_NEAR(smallest_nonzero_eig(L2, M2).lambda1 / base, 1.0, 1e-8);
  DiagMass M3 = op.M;
  M3.weights *= 4.0;
  EXPECT_NEAR(smallest_nonzero_eig(op.L, M3).lambda1 * 4.0 / base, 1.0, 1e-8);
}

TEST(Eigensolver, DeterministicForFixedSeed) {
  const Operators op = assemble(mesh_geodesic_sphere(0.8, 3));
  const EigenResult a = smallest_nonzero_eig(op.L, op.M);
  const EigenResult b = smallest_nonzero_eig(op.L, op.M);
  EXPECT_EQ(a.lambda1, b.lambda1);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Eigensolver, GeodesicSphereSpectrum) {
  const double rho = std::numbers::pi / 3;
  const Operators op = assemble(mesh_geodesic_sphere(rho, 4));
  EXPECT_NEAR(smallest_nonzero_eig(op.L, op.M).lambda1 / (2 / std::pow(std::sin(rho), 2)), 1.0, 1e-3);
}

TEST(Eigensolver, Errors) {
  const Operators op = assemble(mesh_geodesic_sphere(1.0, 2));
  EigenOptions opt;
  opt.iter_cap = 2;
  EXPECT_THROW(smallest_nonzero_eig(op.L, op.M, opt), ConvergenceError);
  opt = {};
  opt.tol = 1e-2;
  EXPECT_THROW(smallest_nonzero_eig(op.L, op.M, opt), DomainError);
  DiagMass bad = op.M;
  bad.weights[0] = 1e-14 * bad.weights.maxCoeff();
  EXPECT_THROW(smallest_nonzero_eig(op.L, bad), IllConditionedError);
  bad.weights[0] = -1.0;
  EXPECT_THROW(smallest_nonzero_eig(op.L, bad), DomainError);
  EXPECT_THROW(dense_eig_oracle(assemble(mesh_geodesic_sphere(1.0, 3)).L, assemble(mesh_geodesic_sphere(1.0, 3)).M),
               SizeError);
}

TEST(Eigensolver, DisconnectedGraphTriggersDeflationGuard) {
  // Two disjoint edges: a second null vector the constant deflation cannot remove.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(4, 4);
  A << 1, -1, 0, 0, -1, 1, 0, 0, 0, 0, 1, -1, 0, 0, -1, 1;
  EXPECT_THROW(smallest_nonzero_eig(sparse(A), DiagMass{Eigen::VectorXd::Ones(4)}), DeflationError);
}

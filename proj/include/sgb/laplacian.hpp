#pragma once

// Cotangent stiffness and lumped mass for the discrete Laplace-Beltrami
// eigenproblem L x = lambda M x. Triangle geometry is intrinsic: edge lengths
// are chordal distances in R^4, areas come from Heron's formula.

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "sgb/error.hpp"
#include "sgb/mesh.hpp"

namespace sgb {

/// Symmetric sparse operator.
struct SparseSym {
  Eigen::SparseMatrix<double, Eigen::RowMajor> matrix;

  Eigen::Index dimension() const { return matrix.rows(); }
};

/// Positive diagonal operator.
struct DiagMass {
  Eigen::VectorXd weights;

  Eigen::Index dimension() const { return weights.size(); }
};

/// Heron's formula in Kahan's cancellation-safe ordering.
inline double heron_area(double a, double b, double c) {
  std::array<double, 3> s{a, b, c};
  std::sort(s.begin(), s.end(), std::greater<>());
  const double x = s[0], y = s[1], z = s[2];
  const double p = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
  return p > 0.0 ? 0.25 * std::sqrt(p) : 0.0;
}

namespace detail {

struct TriangleGeometry {
  std::array<double, 3> sq_len;  ///< squared length of the edge opposite corner c
  double area;
};

inline TriangleGeometry triangle_geometry(const TriMesh& mesh, const Triangle& t) {
  TriangleGeometry g{};
  std::array<double, 3> len{};
  for (int c = 0; c < 3; ++c) {
    len[c] = (mesh.vertices[t[(c + 1) % 3]] - mesh.vertices[t[(c + 2) % 3]]).norm();
    g.sq_len[c] = len[c] * len[c];
  }
  g.area = heron_area(len[0], len[1], len[2]);
  const double scale = std::max({g.sq_len[0], g.sq_len[1], g.sq_len[2]});
  if (!(g.area > 1e-14 * scale)) throw GeometryError("non-positive Heron area");
  return g;
}

}  // namespace detail

/// Cotangent Laplacian: L_ij = -(cot alpha_ij + cot beta_ij)/2 for each edge,
/// L_ii = -sum_j L_ij.
inline SparseSym cotan_stiffness(const TriMesh& mesh) {
  const auto nv = static_cast<Eigen::Index>(mesh.num_vertices());
  std::vector<Eigen::Triplet<double>> trips;
  trips.reserve(6 * mesh.num_triangles());
  for (const Triangle& t : mesh.triangles) {
    const auto g = detail::triangle_geometry(mesh, t);
    for (int c = 0; c < 3; ++c) {
      const double cot = (g.sq_len[(c + 1) % 3] + g.sq_len[(c + 2) % 3] - g.sq_len[c]) / (4.0 * g.area);
      const int i = t[(c + 1) % 3];
      const int j = t[(c + 2) % 3];
      trips.emplace_back(i, j, -0.5 * cot);
      trips.emplace_back(j, i, -0.5 * cot);
    }
  }
  SparseSym L;
  L.matrix.resize(nv, nv);
  L.matrix.setFromTriplets(trips.begin(), trips.end());

  // Insert the diagonal as the exact negated off-diagonal row sum.
  std::vector<Eigen::Triplet<double>> full;
  full.reserve(static_cast<std::size_t>(L.matrix.nonZeros() + nv));
  for (Eigen::Index r = 0; r < nv; ++r) {
    double sum = 0.0;
    for (decltype(L.matrix)::InnerIterator it(L.matrix, r); it; ++it) {
      full.emplace_back(r, it.col(), it.value());
      sum += it.value();
    }
    full.emplace_back(r, r, -sum);
  }
  L.matrix.setFromTriplets(full.begin(), full.end());
  L.matrix.makeCompressed();
  return L;
}

/// Barycentric lumping: M_ii = (1/3) * sum of incident triangle areas.
inline DiagMass lumped_mass(const TriMesh& mesh) {
  DiagMass M;
  M.weights = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(mesh.num_vertices()));
  for (const Triangle& t : mesh.triangles) {
    const double a = detail::triangle_geometry(mesh, t).area / 3.0;
    for (int c = 0; c < 3; ++c) M.weights[t[c]] += a;
  }
  return M;
}

inline double surface_area(const TriMesh& mesh) {
  double total = 0.0;
  for (const Triangle& t : mesh.triangles) total += detail::triangle_geometry(mesh, t).area;
  return total;
}

}  // namespace sgb

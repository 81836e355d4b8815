#pragma once

// Per-vertex curvature of a surface triangulated in S^3. Each one-ring is
// pulled back to T_p S^3 by the sphere log map (normal coordinates, so the
// second fundamental form at p is the Euclidean one of the pulled-back
// surface), and a quadratic height function is fitted over the estimated
// tangent plane.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sgb/error.hpp"
#include "sgb/mesh.hpp"

namespace sgb {

/// Log map of S^3 at p: the tangent vector at p of length dist(p, q) pointing to q.
inline Vec4 sphere_log(const Vec4& p, const Vec4& q) {
  const double c = p.dot(q);
  const Vec4 w = q - c * p;
  const double s = w.norm();
  if (s == 0.0) return Vec4::Zero();
  return std::atan2(s, c) / s * w;
}

/// Unit normals in T_p S^3, averaged over incident faces (area weighted), in
/// the orientation of the triangle list.
inline std::vector<Vec4> vertex_normals(const TriMesh& mesh, const MeshTopology& topo) {
  std::vector<Vec4> normals(mesh.num_vertices(), Vec4::Zero());
  for (std::size_t v = 0; v < mesh.num_vertices(); ++v) {
    const Vec4& p = mesh.vertices[v];
    Vec4 acc = Vec4::Zero();
    for (int f : topo.incident_faces[v]) {
      const Triangle& t = mesh.triangles[f];
      const int c = t[0] == static_cast<int>(v) ? 0 : (t[1] == static_cast<int>(v) ? 1 : 2);
      const Vec4 u1 = sphere_log(p, mesh.vertices[t[(c + 1) % 3]]);
      const Vec4 u2 = sphere_log(p, mesh.vertices[t[(c + 2) % 3]]);
      acc += oriented_face_normal(p, p + u1, p + u2);
    }
    acc -= acc.dot(p) * p;
    const double len = acc.norm();
    if (!(len > 0.0)) throw GeometryError("vertex normal undefined at vertex " + std::to_string(v));
    normals[v] = acc / len;
  }
  return normals;
}

struct CurvatureEstimate {
  std::vector<double> H;  ///< mean curvature k1 + k2 (sign follows the orientation)
  std::vector<double> S;  ///< k1^2 + k2^2
  double max_abs_H = 0.0;
  double max_S = 0.0;
};

/// Least-squares fit of z = d x + e y + (A x^2 + 2 B x y + C y^2)/2 over the
/// one-ring in local coordinates (x, y) on the tangent plane, z along the
/// normal. The shape operator is I^{-1} II of that graph at the origin.
inline CurvatureEstimate estimate_curvature(const TriMesh& mesh) {
  const MeshTopology topo = build_topology(mesh);
  const std::vector<Vec4> normals = vertex_normals(mesh, topo);

  CurvatureEstimate out;
  out.H.resize(mesh.num_vertices());
  out.S.resize(mesh.num_vertices());
  for (std::size_t v = 0; v < mesh.num_vertices(); ++v) {
    const Vec4& p = mesh.vertices[v];
    const Vec4& nu = normals[v];

    std::vector<Vec4> ring;
    ring.reserve(topo.neighbors[v].size());
    for (int q : topo.neighbors[v]) {
      const Vec4 u = sphere_log(p, mesh.vertices[q]);
      if (u.norm() > 1e-12) ring.push_back(u);
    }
    if (ring.size() < 5)
      throw FitError("one-ring of vertex " + std::to_string(v) + " has fewer than 5 usable neighbours");

    // Tangent frame (e1, e2) of the surface, orthogonal to p and nu.
    Vec4 e1 = ring.front() - ring.front().dot(nu) * nu;
    e1 -= e1.dot(p) * p;
    e1.normalize();
    Vec4 e2 = cross4(p, nu, e1);
    e2.normalize();

    double scale = 0.0;
    for (const Vec4& u : ring) scale = std::max(scale, u.norm());

    Eigen::MatrixXd A(static_cast<Eigen::Index>(ring.size()), 5);
    Eigen::VectorXd z(static_cast<Eigen::Index>(ring.size()));
    for (std::size_t r = 0; r < ring.size(); ++r) {
      const double x = ring[r].dot(e1) / scale;
      const double y = ring[r].dot(e2) / scale;
      const auto i = static_cast<Eigen::Index>(r);
      A(i, 0) = x;
      A(i, 1) = y;
      A(i, 2) = 0.5 * x * x;
      A(i, 3) = x * y;
      A(i, 4) = 0.5 * y * y;
      z[i] = ring[r].dot(nu) / scale;
    }
    const Eigen::VectorXd c = A.colPivHouseholderQr().solve(z);
    const double gx = c[0], gy = c[1];
    // Second derivatives in unscaled coordinates.
    const double hxx = c[2] / scale, hxy = c[3] / scale, hyy = c[4] / scale;

    const double w = std::sqrt(1.0 + gx * gx + gy * gy);
    Eigen::Matrix2d first;
    first << 1.0 + gx * gx, gx * gy, gx * gy, 1.0 + gy * gy;
    Eigen::Matrix2d second;
    second << hxx, hxy, hxy, hyy;
    second /= w;
    const Eigen::Matrix2d shape = first.inverse() * second;

    const double H = shape.trace();
    const double gauss = shape.determinant();
    const double S = std::max(0.0, H * H - 2.0 * gauss);
    out.H[v] = H;
    out.S[v] = S;
    out.max_abs_H = std::max(out.max_abs_H, std::abs(H));
    out.max_S = std::max(out.max_S, S);
  }
  return out;
}

}  // namespace sgb

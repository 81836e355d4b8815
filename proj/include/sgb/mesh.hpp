#pragma once

// Triangle meshes of closed surfaces in the unit 3-sphere S^3 in R^4.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "sgb/error.hpp"

namespace sgb {

using Vec4 = Eigen::Vector4d;
using Triangle = std::array<int, 3>;

struct TriMesh {
  std::vector<Vec4> vertices;
  std::vector<Triangle> triangles;

  std::size_t num_vertices() const { return vertices.size(); }
  std::size_t num_triangles() const { return triangles.size(); }
};

/// The vector n with n . x = det[a; b; c; x] for all x. It is orthogonal to a,
/// b and c, and its length is the 3-volume spanned by them.
inline Vec4 cross4(const Vec4& a, const Vec4& b, const Vec4& c) {
  const auto minor = [&](int i, int j, int k) {
    return a[i] * (b[j] * c[k] - b[k] * c[j]) - a[j] * (b[i] * c[k] - b[k] * c[i]) +
           a[k] * (b[i] * c[j] - b[j] * c[i]);
  };
  return {-minor(1, 2, 3), minor(0, 2, 3), -minor(0, 1, 3), minor(0, 1, 2)};
}

/// Oriented normal in T_p S^3 of the triangle (p, q1, q2), scaled by the area
/// of the spanned parallelogram (projected onto T_p S^3).
inline Vec4 oriented_face_normal(const Vec4& p, const Vec4& q1, const Vec4& q2) { return cross4(p, q2, q1); }

inline double great_circle_distance(const Vec4& p, const Vec4& q) {
  const double c = p.dot(q);
  const double s = (q - c * p).norm();
  return std::atan2(s, c);
}

using Edge = std::pair<int, int>;

/// Edge/one-ring structure derived from the triangle list.
struct MeshTopology {
  std::vector<Edge> edges;                         ///< sorted, i < j
  std::vector<std::vector<int>> neighbors;         ///< one-ring vertices, sorted
  std::vector<std::vector<int>> incident_faces;    ///< triangles containing each vertex
};

inline MeshTopology build_topology(const TriMesh& mesh) {
  MeshTopology topo;
  const std::size_t nv = mesh.num_vertices();
  topo.neighbors.assign(nv, {});
  topo.incident_faces.assign(nv, {});
  for (std::size_t f = 0; f < mesh.triangles.size(); ++f) {
    const Triangle& t = mesh.triangles[f];
    for (int c = 0; c < 3; ++c) {
      const int i = t[c];
      const int j = t[(c + 1) % 3];
      topo.incident_faces[i].push_back(static_cast<int>(f));
      topo.edges.emplace_back(std::min(i, j), std::max(i, j));
      topo.neighbors[i].push_back(j);
      topo.neighbors[j].push_back(i);
    }
  }
  std::sort(topo.edges.begin(), topo.edges.end());
  topo.edges.erase(std::unique(topo.edges.begin(), topo.edges.end()), topo.edges.end());
  for (auto& ring : topo.neighbors) {
    std::sort(ring.begin(), ring.end());
    ring.erase(std::unique(ring.begin(), ring.end()), ring.end());
  }
  return topo;
}

inline long euler_characteristic(const TriMesh& mesh) {
  const MeshTopology topo = build_topology(mesh);
  return static_cast<long>(mesh.num_vertices()) - static_cast<long>(topo.edges.size()) +
         static_cast<long>(mesh.num_triangles());
}

inline double max_edge_length(const TriMesh& mesh) {
  double m = 0.0;
  for (const Triangle& t : mesh.triangles)
    for (int c = 0; c < 3; ++c) m = std::max(m, (mesh.vertices[t[c]] - mesh.vertices[t[(c + 1) % 3]]).norm());
  return m;
}

inline constexpr double kUnitNormTol = 1e-12;
inline constexpr double kMinAngle = 1e-6;

/// Checks every TriMesh invariant: unit vertices, valid indices, closed
/// 2-manifold edges (each edge in exactly two triangles), no sliver triangles.
inline void validate_mesh(const TriMesh& mesh) {
  const auto nv = static_cast<int>(mesh.num_vertices());
  if (nv < 4 || mesh.triangles.empty()) throw GeometryError("mesh: too few vertices or triangles");
  for (int i = 0; i < nv; ++i) {
    if (!mesh.vertices[i].allFinite() || std::abs(mesh.vertices[i].norm() - 1.0) > kUnitNormTol)
      throw GeometryError("mesh: vertex " + std::to_string(i) + " is not on S^3");
  }
  std::map<Edge, int> edge_count;
  for (const Triangle& t : mesh.triangles) {
    for (int c = 0; c < 3; ++c) {
      if (t[c] < 0 || t[c] >= nv) throw GeometryError("mesh: triangle index out of range");
    }
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) throw GeometryError("mesh: triangle with repeated vertex");
    for (int c = 0; c < 3; ++c) {
      const int i = t[c];
      const int j = t[(c + 1) % 3];
      ++edge_count[{std::min(i, j), std::max(i, j)}];
      // interior angle at t[c]
      const Vec4 e1 = mesh.vertices[j] - mesh.vertices[i];
      const Vec4 e2 = mesh.vertices[t[(c + 2) % 3]] - mesh.vertices[i];
      const double cosang = e1.dot(e2) / (e1.norm() * e2.norm());
      const double ang = std::acos(std::clamp(cosang, -1.0, 1.0));
      if (!(ang > kMinAngle)) throw GeometryError("mesh: degenerate triangle (angle below 1e-6 rad)");
    }
  }
  for (const auto& [e, count] : edge_count) {
    if (count != 2)
      throw GeometryError("mesh: edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ") lies in " +
                          std::to_string(count) + " triangles, expected 2");
  }
}

/// Consistent orientation: every directed edge is traversed exactly once.
inline bool consistently_oriented(const TriMesh& mesh) {
  std::vector<Edge> directed;
  directed.reserve(3 * mesh.num_triangles());
  for (const Triangle& t : mesh.triangles)
    for (int c = 0; c < 3; ++c) directed.emplace_back(t[c], t[(c + 1) % 3]);
  std::sort(directed.begin(), directed.end());
  return std::adjacent_find(directed.begin(), directed.end()) == directed.end();
}

namespace detail {

inline void flip_all(TriMesh& mesh) {
  for (Triangle& t : mesh.triangles) std::swap(t[1], t[2]);
}

/// Orient so that the face normal at triangle 0, vertex 0, agrees with `want`.
inline void orient_towards(TriMesh& mesh, const Vec4& want) {
  const Triangle& t = mesh.triangles.front();
  const Vec4 nrm = oriented_face_normal(mesh.vertices[t[0]], mesh.vertices[t[1]], mesh.vertices[t[2]]);
  if (nrm.dot(want) < 0.0) flip_all(mesh);
}

}  // namespace detail

/// Icosahedron subdivided `level` times, pushed to the unit 2-sphere and
/// embedded as the distance sphere (sin(rho0) w, cos(rho0)) about the pole
/// e4. The outer normal points away from the pole.
inline TriMesh mesh_geodesic_sphere(double rho0, int level) {
  constexpr double half_pi = std::numbers::pi / 2;
  if (!(rho0 > 0.0) || rho0 > half_pi + 1e-15) throw DomainError("mesh_geodesic_sphere: rho0 must lie in (0, pi/2]");
  if (level < 0 || level > 7) throw DomainError("mesh_geodesic_sphere: level must lie in [0, 7]");
  rho0 = std::min(rho0, half_pi);

  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Eigen::Vector3d> pts = {
      {-1, phi, 0}, {1, phi, 0}, {-1, -phi, 0}, {1, -phi, 0}, {0, -1, phi}, {0, 1, phi},
      {0, -1, -phi}, {0, 1, -phi}, {phi, 0, -1}, {phi, 0, 1}, {-phi, 0, -1}, {-phi, 0, 1}};
  for (auto& p : pts) p.normalize();
  std::vector<Triangle> faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                                 {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                                 {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                                 {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};

  for (int l = 0; l < level; ++l) {
    std::map<Edge, int> midpoint;
    const auto mid = [&](int i, int j) {
      const Edge key{std::min(i, j), std::max(i, j)};
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      pts.push_back((pts[i] + pts[j]).normalized());
      const int idx = static_cast<int>(pts.size()) - 1;
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<Triangle> next;
    next.reserve(4 * faces.size());
    for (const Triangle& f : faces) {
      const int a = mid(f[0], f[1]);
      const int b = mid(f[1], f[2]);
      const int c = mid(f[2], f[0]);
      next.push_back({f[0], a, c});
      next.push_back({f[1], b, a});
      next.push_back({f[2], c, b});
      next.push_back({a, b, c});
    }
    faces = std::move(next);
  }

  TriMesh mesh;
  const double s = std::sin(rho0);
  const double c = rho0 == half_pi ? 0.0 : std::cos(rho0);
  mesh.vertices.reserve(pts.size());
  for (const auto& w : pts) {
    Vec4 v(s * w.x(), s * w.y(), s * w.z(), c);
    mesh.vertices.push_back(v.normalized());
  }
  mesh.triangles = std::move(faces);

  const Eigen::Vector3d& w0 = pts[static_cast<std::size_t>(mesh.triangles.front()[0])];
  detail::orient_towards(mesh, Vec4(c * w0.x(), c * w0.y(), c * w0.z(), -s));
  return mesh;
}

/// Product torus (a cos u, a sin u, b cos v, b sin v) on an Nu x Nv grid.
/// Every quad is split along its (i,j)-(i+1,j+1) diagonal. The outer normal
/// points toward the circle |x3,x4| = 1.
inline TriMesh mesh_product_torus(double a, int Nu, int Nv) {
  if (!(a > 0.0) || !(a < 1.0)) throw DomainError("mesh_product_torus: a must lie in (0, 1)");
  if (Nu < 8 || Nv < 8) throw DomainError("mesh_product_torus: Nu, Nv >= 8 required");
  const double b = std::abs(1.0 - 2.0 * a * a) <= 1e-15 ? a : std::sqrt(1.0 - a * a);
  const double tau = 2.0 * std::numbers::pi;

  TriMesh mesh;
  mesh.vertices.reserve(static_cast<std::size_t>(Nu) * Nv);
  for (int i = 0; i < Nu; ++i) {
    const double u = tau * i / Nu;
    for (int j = 0; j < Nv; ++j) {
      const double v = tau * j / Nv;
      mesh.vertices.push_back(Vec4(a * std::cos(u), a * std::sin(u), b * std::cos(v), b * std::sin(v)).normalized());
    }
  }
  const auto id = [&](int i, int j) { return ((i + Nu) % Nu) * Nv + (j + Nv) % Nv; };
  mesh.triangles.reserve(2 * static_cast<std::size_t>(Nu) * Nv);
  for (int i = 0; i < Nu; ++i) {
    for (int j = 0; j < Nv; ++j) {
      mesh.triangles.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      mesh.triangles.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  }
  // Outer normal at (u, v) = (0, 0): (-b, 0, a, 0).
  detail::orient_towards(mesh, Vec4(-b, 0.0, a, 0.0));
  return mesh;
}

}  // namespace sgb

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <vector>

#include "sgb/curvature.hpp"
#include "sgb/error.hpp"
#include "sgb/mesh.hpp"
#include "sgb/optimize.hpp"

namespace sgb {

/// `outer` follows the orientation normal of the triangle list; `inner` is its opposite.
enum class Side { inner, outer };

struct RollingRadiusEstimate {
  double radius = 0.0;
  double tol_geo = 0.0;  ///< resolution caveat on the distance predicate
  int worst_vertex = -1;
};

/// Great-circle distance from x to the nearest mesh vertex.
inline double nearest_vertex_distance(const TriMesh& mesh, const Vec4& x) {
  double best = -2.0;
  for (const Vec4& v : mesh.vertices) best = std::max(best, v.dot(x));
  return std::acos(std::clamp(best, -1.0, 1.0));
}

/// Rolling radius toward `side`: for sampled vertices p flow the great circle
/// cos(t) p + sin(t) nu and locate, by bisection on (0, pi/2], the last time the
/// flow is still at distance >= t - tol_geo from the mesh (tol_geo = 2 x max
/// edge length). Past a cut point the distance falls off with slope -1, so that
/// crossing sits tol_geo/2 beyond the cut; it is subtracted. The minimum over
/// samples is returned.
inline RollingRadiusEstimate estimate_rolling_radius(const TriMesh& mesh, Side side, int samples) {
  if (samples < 32) throw DomainError("estimate_rolling_radius: at least 32 samples required");
  if (!consistently_oriented(mesh)) throw OrientationError("estimate_rolling_radius: inconsistent triangle orientation");

  const MeshTopology topo = build_topology(mesh);
  const std::vector<Vec4> normals = vertex_normals(mesh, topo);
  const double sign = side == Side::outer ? 1.0 : -1.0;

  RollingRadiusEstimate out;
  out.tol_geo = 2.0 * max_edge_length(mesh);
  out.radius = std::numeric_limits<double>::infinity();

  const std::size_t nv = mesh.num_vertices();
  const std::size_t count = std::min<std::size_t>(static_cast<std::size_t>(samples), nv);
  constexpr double half_pi = std::numbers::pi / 2;
  for (std::size_t s = 0; s < count; ++s) {
    const std::size_t v = s * nv / count;
    const Vec4& p = mesh.vertices[v];
    const Vec4 nu = sign * normals[v];
    const auto flow_ok = [&](double t) {
      const Vec4 x = std::cos(t) * p + std::sin(t) * nu;
      return nearest_vertex_distance(mesh, x) >= t - out.tol_geo;
    };
    double t_cut = half_pi;
    if (!flow_ok(half_pi)) {
      // predicate as a sign: negative while the flow is still minimizing
      const auto g = [&](double t) { return flow_ok(t) ? -1.0 : 1.0; };
      t_cut = std::max(0.0, bisect(g, 0.0, half_pi, 1e-10).root - 0.5 * out.tol_geo);
    }
    if (t_cut < out.radius) {
      out.radius = t_cut;
      out.worst_vertex = static_cast<int>(v);
    }
  }
  return out;
}

}  // namespace sgb

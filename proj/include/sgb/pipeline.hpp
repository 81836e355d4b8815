#pragma once

// Family -> mesh -> discrete spectrum -> bounds, one CSV row per parameter.

#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sgb/bounds.hpp"
#include "sgb/eigensolver.hpp"
#include "sgb/error.hpp"
#include "sgb/families.hpp"
#include "sgb/laplacian.hpp"
#include "sgb/mesh.hpp"
#include "sgb/report.hpp"
#include "sgb/settings.hpp"

namespace sgb {

inline constexpr const char* kSweepHeader =
    "family,param,n,k,K,H_sigma,S_sigma,roll_R,r,C_r,bound_thm12,bound_thm13,bound_cor14,bound_cor15,bound_cw,"
    "applicable_thm13,lambda1_analytic,lambda1_discrete,margin";

/// Relative discretization tolerance on the discrete first eigenvalue.
inline constexpr double kDiscretizationRelTol = 0.01;

struct VerifyRow {
  FamilyPoint point;
  BoundReport report;
  double lambda1_discrete = 0.0;
  double discretization_tol = 0.0;
  int eig_iterations = 0;

  /// Applicable bounds above lambda1_discrete + 3 * discretization_tol.
  int violations() const {
    int count = 0;
    for (double b : report.applicable_bounds())
      if (b > lambda1_discrete + 3.0 * discretization_tol) ++count;
    return count;
  }
};

/// Meshes a family member: `resolution` is the subdivision level for
/// spheres and the grid size N (N x N) for tori.
inline TriMesh mesh_family(Family f, double param, int resolution) {
  return f == Family::GeodesicSphere ? mesh_geodesic_sphere(param, resolution)
                                     : mesh_product_torus(param, resolution, resolution);
}

inline double discrete_lambda1(const TriMesh& mesh, const EigenOptions& opt, int* iterations = nullptr) {
  const SparseSym L = cotan_stiffness(mesh);
  const DiagMass M = lumped_mass(mesh);
  const EigenResult r = smallest_nonzero_eig(L, M, opt);
  if (iterations) *iterations = r.iterations;
  return r.lambda1;
}

/// Bounds use the exact family data with roll = min(inner, outer) in S^3.
inline VerifyRow verify_family(Family f, double param, int resolution, const Settings& settings,
                               const std::optional<TriMesh>& mesh_override = std::nullopt) {
  VerifyRow row;
  row.point = family_data(f, param);
  const TriMesh mesh = mesh_override ? *mesh_override : mesh_family(f, param, resolution);
  validate_mesh(mesh);
  row.lambda1_discrete = discrete_lambda1(mesh, settings.eigen(), &row.eig_iterations);
  row.discretization_tol = kDiscretizationRelTol * row.lambda1_discrete;

  const CurvatureBounds cb = CurvatureBounds::unit_sphere(row.point.n);
  const HypersurfaceData hs{row.point.H_sigma, row.point.S_sigma, row.point.roll()};
  row.report = evaluate_bounds(cb, hs, settings.supremum(), row.lambda1_discrete);
  return row;
}

inline std::string csv_row(const VerifyRow& row) {
  const BoundReport& b = row.report;
  std::string s;
  const auto put = [&](const std::string& field) {
    if (!s.empty()) s += ',';
    s += field;
  };
  put(std::string(family_name(row.point.family)));
  put(format_number(row.point.param));
  put(std::to_string(b.ambient.n));
  put(format_number(b.ambient.k));
  put(format_number(b.ambient.K));
  put(format_number(b.surface.H_sigma));
  put(format_number(b.surface.S_sigma));
  put(format_number(b.surface.roll_R));
  put(format_number(b.r));
  put(format_number(b.c_r));
  put(format_number(b.rolling));
  put(format_number(b.explicit_));
  put(format_number(b.cauchy));
  put(format_number(b.unit_sphere));
  put(format_number(b.choi_wang));
  put(format_bool(b.rolling_condition));
  put(format_number(row.point.lambda1));
  put(format_number(row.lambda1_discrete));
  put(format_number(b.margin().value_or(std::nan(""))));
  return s;
}

/// Parameters min + i (max - min)/(steps - 1), i = 0..steps-1.
inline std::vector<double> sweep_parameters(double lo, double hi, int steps) {
  if (steps < 1) throw ValidationError("sweep: steps >= 1 required");
  if (steps == 1) return {lo};
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) out.push_back(i + 1 == steps ? hi : lo + (hi - lo) * i / (steps - 1));
  return out;
}

}  // namespace sgb

#pragma once

// Lower bounds for the first nonzero eigenvalue of the Laplacian of a
// closed embedded hypersurface in terms of mean curvature, second
// fundamental form, rolling radius and ambient curvature pinching.

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "sgb/error.hpp"
#include "sgb/families.hpp"
#include "sgb/optimize.hpp"
#include "sgb/params.hpp"

namespace sgb {

struct SupremumOptions {
  std::size_t grid_points = 4096;
  double golden_tol = 1e-9;
};

/// The objective inside the supremum defining C(r):
///   -(n t K + n S) / ((1 - t) sqrt(S)) - sqrt(K) / atan(t sqrt(K/S)),  t in (0, 1).
inline double comparison_objective(int n, double K, double S_sigma, double t) {
  const double sS = std::sqrt(S_sigma);
  return -(n * t * K + n * S_sigma) / ((1.0 - t) * sS) - std::sqrt(K) / std::atan(t * std::sqrt(K / S_sigma));
}

/// C(r): supremum of comparison_objective over t in (0, r).
/// Sampled on [eps, r] with eps = 1e-8 r, then refined by golden section. The
/// objective is continuous at t = r < 1, so the open-interval supremum is the
/// value there; at r = 1 it diverges to -inf and the right end stops at r - eps.
inline double comparison_constant(int n, double K, double S_sigma, double r, const SupremumOptions& opt = {}) {
  if (S_sigma == 0.0) throw DegenerateError("comparison_constant: S_sigma = 0 (totally geodesic)");
  if (!(S_sigma > 0.0)) throw DomainError("comparison_constant: S_sigma must be positive");
  if (!(r > 0.0) || r > 1.0) throw DomainError("comparison_constant: r must lie in (0, 1]");
  if (opt.grid_points < 4096) throw DomainError("comparison_constant: at least 4096 grid points required");
  const double eps = 1e-8 * r;
  const auto f = [&](double t) { return comparison_objective(n, K, S_sigma, t); };
  return grid_golden_maximize(f, eps, r < 1.0 ? r : r - eps, opt.grid_points, opt.golden_tol).value;
}

/// Uniform lower estimate of C(r) used by the explicit bound:
///   -(n K + 2 sqrt(S K)/atan(sqrt K) + 2 n sqrt S).
inline double comparison_constant_lower(int n, double K, double S_sigma) {
  if (S_sigma == 0.0) throw DegenerateError("comparison_constant_lower: S_sigma = 0 (totally geodesic)");
  const double sS = std::sqrt(S_sigma);
  return -(n * K + 2.0 * std::sqrt(S_sigma * K) / std::atan(std::sqrt(K)) + 2.0 * n * sS);
}

/// Balancing parameter of the small-S branch of the explicit estimate,
/// [sqrt S + n (sqrt(S/K) + sqrt K) atan(sqrt K)]^{-1}.
inline double small_s_balance_point(int n, double K, double S_sigma) {
  if (S_sigma == 0.0) throw DegenerateError("small_s_balance_point: S_sigma = 0 (totally geodesic)");
  const double sK = std::sqrt(K);
  return 1.0 / (std::sqrt(S_sigma) + n * (std::sqrt(S_sigma / K) + sK) * std::atan(sK));
}

/// A bound value plus the flags the report needs.
struct BoundValue {
  double value = 0.0;
  bool applicable = true;
  bool degenerate = false;  ///< S = 0: formula routed to k/2

  bool vacuous() const { return value <= 0.0; }
};

/// Choi-Wang bound k/2 for minimal hypersurfaces.
inline double bound_choi_wang(double k) {
  if (!(k > 0.0)) throw DomainError("bound_choi_wang: k must be positive");
  return 0.5 * k;
}

/// k/2 + (H/2) (C(r) - n H/(n+1)), with r from the rolling radius.
inline BoundValue bound_rolling(const CurvatureBounds& cb, const HypersurfaceData& hs, const SupremumOptions& opt = {}) {
  validate(cb, hs);
  if (hs.totally_geodesic()) return {bound_choi_wang(cb.k), true, true};
  if (hs.H_sigma == 0.0) return {bound_choi_wang(cb.k), true, false};
  const RollParams rp = t_of_R(cb, hs);
  const double c = comparison_constant(cb.n, cb.K, hs.S_sigma, rp.r, opt);
  const double n = cb.n;
  return {0.5 * cb.k + 0.5 * hs.H_sigma * (c - n / (n + 1.0) * hs.H_sigma), true, false};
}

/// Penalty multiplying H/2 in the explicit bound.
inline double explicit_penalty(const CurvatureBounds& cb, double H_sigma, double S_sigma) {
  const double n = cb.n;
  const double sS = std::sqrt(S_sigma);
  return n * cb.K + 2.0 * std::sqrt(S_sigma * cb.K) / std::atan(std::sqrt(cb.K)) + 2.0 * n * sS +
         n / (n + 1.0) * H_sigma;
}

/// k/2 - (H/2) (n K + 2 sqrt(S K)/atan(sqrt K) + 2 n sqrt S + n H/(n+1)).
/// Computed even when the rolling condition fails; `applicable` records it.
inline BoundValue bound_explicit(const CurvatureBounds& cb, const HypersurfaceData& hs) {
  validate(cb, hs);
  if (hs.totally_geodesic()) return {bound_choi_wang(cb.k), true, true};
  const bool applicable = rolling_condition_holds(cb, hs);
  if (hs.H_sigma == 0.0) return {bound_choi_wang(cb.k), applicable, false};
  return {0.5 * cb.k - 0.5 * hs.H_sigma * explicit_penalty(cb, hs.H_sigma, hs.S_sigma), applicable, false};
}

/// Explicit bound with H eliminated through H <= sqrt(n S).
inline double bound_cauchy(const CurvatureBounds& cb, double S_sigma) {
  validate(cb);
  if (!(S_sigma >= 0.0)) throw DomainError("bound_cauchy: S_sigma must be nonnegative");
  if (S_sigma == 0.0) return bound_choi_wang(cb.k);
  const double n = cb.n;
  const double sS = std::sqrt(S_sigma);
  const double penalty = n * cb.K + 2.0 * std::sqrt(S_sigma * cb.K) / std::atan(std::sqrt(cb.K)) + 2.0 * n * sS +
                         std::pow(n, 1.5) / (n + 1.0) * sS;
  return 0.5 * cb.k - 0.5 * std::sqrt(n * S_sigma) * penalty;
}

/// Explicit bound specialised to the unit sphere (k = n, K = 1):
/// n/2 - (H/2) (n + (8 + 2 n pi)/pi sqrt S + n H/(n+1)).
inline double bound_unit_sphere(int n, double H_sigma, double S_sigma) {
  if (n < 1) throw DomainError("bound_unit_sphere: n >= 1 required");
  if (!(H_sigma >= 0.0) || !(S_sigma >= 0.0)) throw DomainError("bound_unit_sphere: H_sigma, S_sigma must be nonnegative");
  const double nd = n;
  if (H_sigma == 0.0) return 0.5 * nd;
  const double pi = std::numbers::pi;
  return 0.5 * nd - 0.5 * H_sigma * (nd + (8.0 + 2.0 * nd * pi) / pi * std::sqrt(S_sigma) + nd / (nd + 1.0) * H_sigma);
}

/// Mean of |h|^2 against the unit-sphere bound scaled by the volume excess.
struct VolumePinchingCheck {
  double lhs = 0.0;    ///< int S / Vol
  double rhs = 0.0;    ///< bound_unit_sphere * (1 - Vol(S^n)^2 / Vol^2)
  double slack = 0.0;  ///< lhs - rhs
  bool equality = false;
};

inline VolumePinchingCheck volume_pinching_check(int n, double volume, double integral_S, double H_sigma,
                                                 double S_sigma, double tol = 1e-12) {
  const double vs = vol_unit_sphere(n);
  if (!(volume >= vs * (1.0 - 1e-12)))
    throw NotApplicable("volume_pinching_check: Vol(Sigma) >= Vol(S^n) required");
  const double ratio = std::min(vs / volume, 1.0);
  VolumePinchingCheck out;
  out.lhs = integral_S / volume;
  out.rhs = bound_unit_sphere(n, H_sigma, S_sigma) * (1.0 - ratio * ratio);
  out.slack = out.lhs - out.rhs;
  out.equality = std::abs(out.slack) < tol && S_sigma == 0.0;
  return out;
}

struct EtaResult {
  double eta = 0.0;
  double bracket_width = 0.0;
  double c = 0.0;  ///< 1 - (1 + delta)^{-2}
};

/// The function S -> max(0, bound_unit_sphere(n, sqrt(n S), S)).
inline double pinching_gain(int n, double S) {
  return std::max(0.0, bound_unit_sphere(n, std::sqrt(n * S), S));
}

/// Lower bound eta(delta) on S_sigma for hypersurfaces of S^{n+1} whose
/// volume is at least (1 + delta) Vol(S^n): the root of S = c G(S) with
/// c = 1 - (1+delta)^{-2} and G = pinching_gain. Bisection on [0, c n/2].
inline EtaResult pinching_eta(int n, double delta, double abs_tol = 1e-10) {
  if (!(delta > 0.0)) throw DomainError("pinching_eta: delta must be positive");
  if (n < 1) throw DomainError("pinching_eta: n >= 1 required");
  EtaResult out;
  out.c = 1.0 - 1.0 / ((1.0 + delta) * (1.0 + delta));
  const auto g = [&](double S) { return S - out.c * pinching_gain(n, S); };
  const BisectionResult b = bisect(g, 0.0, out.c * n / 2.0, abs_tol);
  out.eta = b.root;
  out.bracket_width = b.bracket_width;
  return out;
}

}  // namespace sgb

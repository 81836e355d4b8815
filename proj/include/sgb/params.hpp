#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sgb/error.hpp"

namespace sgb {

/// Curvature pinching of the ambient manifold N^{n+1}.
struct CurvatureBounds {
  int n = 2;       ///< dimension of the hypersurface
  double k = 2.0;  ///< Ricci lower bound of N
  double K = 1.0;  ///< sectional upper bound of N

  /// The unit sphere S^{n+1}: Ric = n, sec = 1.
  static constexpr CurvatureBounds unit_sphere(int n) { return {n, static_cast<double>(n), 1.0}; }
};

/// Extrinsic data of the hypersurface.
struct HypersurfaceData {
  double H_sigma = 0.0;  ///< max |H|
  double S_sigma = 0.0;  ///< max |h|^2
  double roll_R = 0.0;   ///< rolling radius

  bool totally_geodesic() const { return S_sigma == 0.0; }
};

/// Rolling parameter t_R and the optimization range r = min(t_R, 1).
struct RollParams {
  double t_R = 0.0;
  double r = 0.0;
};

/// Relative slack allowed in the Cauchy inequality n S >= H^2.
inline constexpr double kCauchySlack = 1e-9;

inline void validate(const CurvatureBounds& cb) {
  if (cb.n < 1) throw ValidationError("CurvatureBounds: n >= 1 violated (n = " + std::to_string(cb.n) + ")");
  if (!(cb.k > 0.0) || !std::isfinite(cb.k)) throw ValidationError("CurvatureBounds: k > 0 violated");
  if (!(cb.K > 0.0) || !std::isfinite(cb.K)) throw ValidationError("CurvatureBounds: K > 0 violated");
}

inline void validate(const HypersurfaceData& hs, int n) {
  if (!(hs.H_sigma >= 0.0) || !std::isfinite(hs.H_sigma))
    throw ValidationError("HypersurfaceData: H_sigma >= 0 violated");
  if (!(hs.S_sigma >= 0.0) || !std::isfinite(hs.S_sigma))
    throw ValidationError("HypersurfaceData: S_sigma >= 0 violated");
  if (!(hs.roll_R > 0.0) || !std::isfinite(hs.roll_R))
    throw ValidationError("HypersurfaceData: roll_R > 0 violated");
  if (n * hs.S_sigma < hs.H_sigma * hs.H_sigma * (1.0 - kCauchySlack))
    throw ValidationError("HypersurfaceData: Cauchy inequality n*S_sigma >= H_sigma^2 violated");
}

inline void validate(const CurvatureBounds& cb, const HypersurfaceData& hs) {
  validate(cb);
  validate(hs, cb.n);
}

/// Inverse of the rolling parametrization: R = atan(t sqrt(K/S)) / sqrt(K).
inline double R_of_t(const CurvatureBounds& cb, double S_sigma, double t) {
  if (S_sigma == 0.0) throw DegenerateError("R_of_t: S_sigma = 0 (totally geodesic)");
  if (!(S_sigma > 0.0)) throw DomainError("R_of_t: S_sigma must be positive");
  if (!(t > 0.0)) throw DomainError("R_of_t: t must be positive");
  const double sqK = std::sqrt(cb.K);
  return std::atan(t * std::sqrt(cb.K / S_sigma)) / sqK;
}

/// t_R = sqrt(S/K) tan(sqrt(K) R), defined while sqrt(K) R < pi/2.
inline RollParams t_of_R(const CurvatureBounds& cb, const HypersurfaceData& hs) {
  if (hs.S_sigma == 0.0) throw DegenerateError("t_of_R: S_sigma = 0 (totally geodesic)");
  const double angle = std::sqrt(cb.K) * hs.roll_R;
  if (!(angle > 0.0) || angle >= std::numbers::pi / 2)
    throw DomainError("t_of_R: requires 0 < sqrt(K)*roll_R < pi/2");
  RollParams p;
  p.t_R = std::sqrt(hs.S_sigma / cb.K) * std::tan(angle);
  p.r = std::min(p.t_R, 1.0);
  return p;
}

/// Minimum rolling radius atan(sqrt(K/S)/2)/sqrt(K) for the explicit bound.
inline double rolling_threshold(const CurvatureBounds& cb, double S_sigma) {
  if (S_sigma == 0.0) throw DegenerateError("rolling_threshold: S_sigma = 0 (condition vacuous)");
  return std::atan(0.5 * std::sqrt(cb.K / S_sigma)) / std::sqrt(cb.K);
}

/// True iff roll_R reaches the threshold above.
inline bool rolling_condition_holds(const CurvatureBounds& cb, const HypersurfaceData& hs) {
  return hs.roll_R >= rolling_threshold(cb, hs.S_sigma);
}

}  // namespace sgb

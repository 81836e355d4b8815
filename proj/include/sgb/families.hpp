#pragma once

// Closed-form ground truth for two families of surfaces in the unit
// 3-sphere: geodesic spheres and product tori S^1(a) x S^1(b), a^2 + b^2 = 1.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string_view>

#include "sgb/error.hpp"

namespace sgb {

enum class Family { GeodesicSphere, ProductTorus };

inline std::string_view family_name(Family f) {
  return f == Family::GeodesicSphere ? "sphere" : "torus";
}

struct FamilyPoint {
  Family family = Family::GeodesicSphere;
  double param = 0.0;  ///< rho0 for spheres, a for tori
  int n = 2;
  double H_sigma = 0.0;
  double S_sigma = 0.0;
  double roll_inner = 0.0;
  double roll_outer = 0.0;
  double lambda1 = 0.0;
  double volume = 0.0;

  /// The side is not known from (H, S) alone; the smaller radius only weakens bounds.
  double roll() const { return std::min(roll_inner, roll_outer); }
  /// Integral of |h|^2; both families have constant |h|^2.
  double integral_S() const { return S_sigma * volume; }
};

/// Area of the unit n-sphere, 2 pi^{(n+1)/2} / Gamma((n+1)/2).
inline double vol_unit_sphere(int n) {
  if (n < 1) throw DomainError("vol_unit_sphere: n >= 1 required");
  const double h = 0.5 * (n + 1);
  return 2.0 * std::pow(std::numbers::pi, h) / std::tgamma(h);
}

/// Distance sphere of radius rho0 about a point of S^3.
/// Inner side: toward the center (cut locus at distance rho0).
/// Outer side: toward the antipode, capped at pi/2.
inline FamilyPoint geodesic_sphere_data(double rho0) {
  constexpr double half_pi = std::numbers::pi / 2;
  if (!(rho0 > 0.0) || rho0 > half_pi + 1e-15) throw DomainError("geodesic_sphere_data: rho0 must lie in (0, pi/2]");
  rho0 = std::min(rho0, half_pi);
  const double s = std::sin(rho0);
  const double cot = rho0 == half_pi ? 0.0 : std::cos(rho0) / s;

  FamilyPoint p;
  p.family = Family::GeodesicSphere;
  p.param = rho0;
  p.H_sigma = 2.0 * std::abs(cot);
  p.S_sigma = 2.0 * cot * cot;
  p.lambda1 = 2.0 / (s * s);
  p.volume = 4.0 * std::numbers::pi * s * s;
  p.roll_inner = rho0;
  p.roll_outer = std::min(std::numbers::pi - rho0, half_pi);
  return p;
}

/// Product torus (a cos u, a sin u, b cos v, b sin v).
/// Principal curvatures b/a and -a/b; the induced metric is flat.
/// Inner side: toward the circle |x1,x2| = 1, reached after arccos(a).
/// Outer side: toward the circle |x3,x4| = 1, reached after pi/2 - arccos(a).
inline FamilyPoint product_torus_data(double a) {
  if (!(a > 0.0) || !(a < 1.0)) throw DomainError("product_torus_data: a must lie in (0, 1)");
  const bool clifford = std::abs(1.0 - 2.0 * a * a) <= 1e-15;
  const double b = clifford ? a : std::sqrt(1.0 - a * a);

  FamilyPoint p;
  p.family = Family::ProductTorus;
  p.param = a;
  p.H_sigma = clifford ? 0.0 : std::abs(1.0 - 2.0 * a * a) / (a * b);
  p.S_sigma = clifford ? 2.0 : b * b / (a * a) + a * a / (b * b);
  p.lambda1 = std::min(1.0 / (a * a), 1.0 / (b * b));
  p.volume = 4.0 * std::numbers::pi * std::numbers::pi * a * b;
  p.roll_inner = clifford ? std::numbers::pi / 4 : std::acos(a);
  p.roll_outer = clifford ? std::numbers::pi / 4 : std::numbers::pi / 2 - std::acos(a);
  if (clifford) p.lambda1 = 2.0;
  return p;
}

inline FamilyPoint clifford_torus_data() { return product_torus_data(std::sqrt(0.5)); }

inline FamilyPoint family_data(Family f, double param) {
  return f == Family::GeodesicSphere ? geodesic_sphere_data(param) : product_torus_data(param);
}

}  // namespace sgb

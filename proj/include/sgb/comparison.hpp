#pragma once

// Comparison functions for the distance to a hypersurface under an upper
// sectional curvature bound: the Jacobi-type solutions of y'' + kappa y = 0
// and the resulting lower bound on the Laplacian of the distance function.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "sgb/error.hpp"

namespace sgb {

/// Samples of a solution of y'' + kappa(t) y = 0 on a uniform grid.
struct OdeSolution {
  std::vector<double> grid;
  std::vector<double> values;
  std::vector<double> derivative_values;
};

/// h(t) = cos(sqrt(K) t) + (Gamma/sqrt(K)) sin(sqrt(K) t), the solution with
/// h(0) = 1, h'(0) = Gamma for constant curvature K.
inline double kasue_h(double K, double Gamma, double t) {
  const double s = std::sqrt(K);
  return std::cos(s * t) + Gamma / s * std::sin(s * t);
}

inline double kasue_h_derivative(double K, double Gamma, double t) {
  const double s = std::sqrt(K);
  return -s * std::sin(s * t) + Gamma * std::cos(s * t);
}

/// First positive zero of kasue_h.
inline double kasue_h_first_zero(double K, double Gamma) {
  const double s = std::sqrt(K);
  if (Gamma < 0.0) return std::atan(s / -Gamma) / s;
  if (Gamma == 0.0) return std::numbers::pi / (2.0 * s);
  return (std::numbers::pi - std::atan(s / Gamma)) / s;
}

/// f(t) = sin(sqrt(K) t)/sqrt(K): f(0) = 0, f'(0) = 1.
inline double kasue_f(double K, double t) {
  const double s = std::sqrt(K);
  return std::sin(s * t) / s;
}

/// Classical fourth-order Runge-Kutta for y'' + kappa(t) y = 0 with fixed step.
/// The step is shrunk to T/N with N = ceil(T/step) so the grid ends at T.
template <class Kappa>
OdeSolution solve_comparison_ode(Kappa&& kappa, double y0, double y0p, double T, double step) {
  if (!(T > 0.0)) throw DomainError("solve_comparison_ode: T must be positive");
  if (!(step > 0.0)) throw DomainError("solve_comparison_ode: step must be positive");
  if (step > T / 16.0) throw StepError("solve_comparison_ode: step > T/16, insufficient resolution");

  const auto steps = static_cast<std::size_t>(std::ceil(T / step - 1e-9));
  const double h = T / static_cast<double>(steps);

  OdeSolution out;
  out.grid.reserve(steps + 1);
  out.values.reserve(steps + 1);
  out.derivative_values.reserve(steps + 1);
  out.grid.push_back(0.0);
  out.values.push_back(y0);
  out.derivative_values.push_back(y0p);

  double y = y0;
  double v = y0p;
  for (std::size_t i = 0; i < steps; ++i) {
    const double t = h * static_cast<double>(i);
    const double k0 = kappa(t);
    const double kh = kappa(t + 0.5 * h);
    const double k1 = kappa(t + h);

    const double y1 = v;
    const double v1 = -k0 * y;
    const double y2 = v + 0.5 * h * v1;
    const double v2 = -kh * (y + 0.5 * h * y1);
    const double y3 = v + 0.5 * h * v2;
    const double v3 = -kh * (y + 0.5 * h * y2);
    const double y4 = v + h * v3;
    const double v4 = -k1 * (y + h * y3);

    y += h / 6.0 * (y1 + 2.0 * y2 + 2.0 * y3 + y4);
    v += h / 6.0 * (v1 + 2.0 * v2 + 2.0 * v3 + v4);

    out.grid.push_back(i + 1 == steps ? T : h * static_cast<double>(i + 1));
    out.values.push_back(y);
    out.derivative_values.push_back(v);
  }
  return out;
}

/// Denominators below this are treated as the blow-up endpoint.
inline constexpr double kEndpointGuard = 1e-12;

/// Right end of the domain on which the comparison bound is finite:
/// atan(sqrt(K/S))/sqrt(K), the first zero of h with Gamma = -sqrt(S).
inline double comparison_endpoint(double K, double S_sigma) {
  return std::atan(std::sqrt(K / S_sigma)) / std::sqrt(K);
}

/// Lower bound C_{S,K}(rho) for the Laplacian of the distance to a
/// hypersurface with |h|^2 <= S, at distance rho:
///   -(n K tan(sqrt(K) rho) + n sqrt(S K)) / (sqrt(K) - sqrt(S) tan(sqrt(K) rho)),
/// which equals n h'/h for h = kasue_h(K, -sqrt(S), .).
inline double laplacian_comparison(int n, double K, double S_sigma, double rho) {
  if (!(S_sigma > 0.0)) throw DegenerateError("laplacian_comparison: S_sigma must be positive");
  if (!(rho >= 0.0)) throw DomainError("laplacian_comparison: rho must be nonnegative");
  const double sK = std::sqrt(K);
  const double sS = std::sqrt(S_sigma);
  if (sK * rho >= std::numbers::pi / 2) throw DomainError("laplacian_comparison: rho beyond the comparison endpoint");
  const double tn = std::tan(sK * rho);
  const double denom = sK - sS * tn;
  if (denom < kEndpointGuard) throw DomainError("laplacian_comparison: rho at or beyond the comparison endpoint");
  return -(n * K * tn + n * std::sqrt(S_sigma * K)) / denom;
}

/// C_{S,K}(rho_a) - 1/rho_a, the quantity optimized over the cutoff width.
inline double f_proof(int n, double K, double S_sigma, double rho_a) {
  if (!(rho_a > 0.0)) throw DomainError("f_proof: rho_a must be positive");
  return laplacian_comparison(n, K, S_sigma, rho_a) - 1.0 / rho_a;
}

}  // namespace sgb

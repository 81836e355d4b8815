#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sgb/bounds.hpp"
#include "sgb/params.hpp"

namespace sgb {

/// Every bound for one (ambient, hypersurface) pair.
struct BoundReport {
  CurvatureBounds ambient;
  HypersurfaceData surface;

  bool degenerate = false;  ///< totally geodesic input
  double t_R = std::numeric_limits<double>::quiet_NaN();
  double r = std::numeric_limits<double>::quiet_NaN();
  double c_r = std::numeric_limits<double>::quiet_NaN();

  double rolling = 0.0;     ///< k/2 + (H/2)(C(r) - n H/(n+1))
  double explicit_ = 0.0;   ///< rolling bound with C(r) replaced by its closed-form estimate
  double cauchy = 0.0;      ///< explicit bound with H -> sqrt(n S)
  double unit_sphere = 0.0; ///< explicit bound at k = n, K = 1
  double choi_wang = 0.0;   ///< k/2

  bool rolling_condition = true;
  bool sphere_ambient = false;  ///< k = n and K = 1

  std::optional<double> lambda1_ref;

  bool minimal() const { return surface.H_sigma == 0.0; }

  /// Largest bound whose hypotheses hold.
  double best_applicable() const {
    double best = rolling;
    if (rolling_condition) {
      best = std::max({best, explicit_, cauchy});
      if (sphere_ambient) best = std::max(best, unit_sphere);
    }
    if (minimal()) best = std::max(best, choi_wang);
    return best;
  }

  /// All bounds whose hypotheses hold, for inequality checks.
  std::vector<double> applicable_bounds() const {
    std::vector<double> out{rolling};
    if (rolling_condition) {
      out.push_back(explicit_);
      out.push_back(cauchy);
      if (sphere_ambient) out.push_back(unit_sphere);
    }
    if (minimal()) out.push_back(choi_wang);
    return out;
  }

  std::optional<double> margin() const {
    if (!lambda1_ref) return std::nullopt;
    return *lambda1_ref - best_applicable();
  }
};

inline BoundReport evaluate_bounds(const CurvatureBounds& cb, const HypersurfaceData& hs,
                                   const SupremumOptions& opt = {},
                                   std::optional<double> lambda1_ref = std::nullopt) {
  validate(cb, hs);
  BoundReport rep;
  rep.ambient = cb;
  rep.surface = hs;
  rep.lambda1_ref = lambda1_ref;
  rep.degenerate = hs.totally_geodesic();
  rep.sphere_ambient = cb.k == static_cast<double>(cb.n) && cb.K == 1.0;
  if (!rep.degenerate) {
    const RollParams rp = t_of_R(cb, hs);
    rep.t_R = rp.t_R;
    rep.r = rp.r;
    rep.c_r = comparison_constant(cb.n, cb.K, hs.S_sigma, rp.r, opt);
  }
  rep.rolling = bound_rolling(cb, hs, opt).value;
  const BoundValue ex = bound_explicit(cb, hs);
  rep.explicit_ = ex.value;
  rep.rolling_condition = ex.applicable;
  rep.cauchy = bound_cauchy(cb, hs.S_sigma);
  rep.unit_sphere = bound_unit_sphere(cb.n, hs.H_sigma, hs.S_sigma);
  rep.choi_wang = bound_choi_wang(cb.k);
  return rep;
}

/// 12 significant digits, '.' separator, independent of the global locale.
inline std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

inline std::string format_bool(bool b) { return b ? "true" : "false"; }

}  // namespace sgb

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace sgb {

struct ScalarMaximum {
  double argmax = 0.0;
  double value = 0.0;
};

/// Golden-section search for a maximum of f on [a, b].
/// Stops once the bracket is narrower than rel_tol * max(|a|, |b|).
template <class F>
ScalarMaximum golden_section_maximize(F&& f, double a, double b, double rel_tol, int max_iter = 500) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < max_iter; ++it) {
    if (b - a <= rel_tol * std::max(std::abs(a), std::abs(b))) break;
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? ScalarMaximum{c, fc} : ScalarMaximum{d, fd};
}

/// Maximize f on [lo, hi]: uniform grid of `points` samples (endpoints
/// included), then golden-section refinement between the neighbours of the
/// best grid sample. Multi-modality is handled by the grid density.
template <class F>
ScalarMaximum grid_golden_maximize(F&& f, double lo, double hi, std::size_t points, double rel_tol) {
  points = std::max<std::size_t>(points, 3);
  const double h = (hi - lo) / static_cast<double>(points - 1);
  std::size_t best = 0;
  double best_value = f(lo);
  for (std::size_t i = 1; i < points; ++i) {
    const double t = i + 1 == points ? hi : lo + h * static_cast<double>(i);
    const double v = f(t);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  const auto at = [&](std::size_t i) { return i + 1 == points ? hi : lo + h * static_cast<double>(i); };
  const double a = at(best == 0 ? 0 : best - 1);
  const double b = at(std::min(best + 1, points - 1));
  ScalarMaximum refined = golden_section_maximize(f, a, b, rel_tol);
  if (refined.value >= best_value) return refined;
  return {at(best), best_value};
}

struct BisectionResult {
  double root = 0.0;
  double bracket_width = 0.0;
  int iterations = 0;
};

/// Bisection for a sign change of f on [a, b] (f(a) and f(b) of opposite sign).
template <class F>
BisectionResult bisect(F&& f, double a, double b, double abs_tol, int max_iter = 400) {
  double fa = f(a);
  int it = 0;
  while (b - a > abs_tol && it < max_iter) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
    ++it;
  }
  return {0.5 * (a + b), b - a, it};
}

}  // namespace sgb

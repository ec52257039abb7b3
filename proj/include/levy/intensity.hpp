#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <variant>

#include "levy/models.hpp"

namespace levy {

// Adaptive Simpson with absolute/relative error control.
namespace quad {

template <class F>
double simpson_recurse(const F& f, double a, double b, double fa, double fm, double fb,
                       double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpson_recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <class F>
double adaptive_simpson(const F& f, double a, double b, double tol, int depth = 48) {
  if (!(b > a)) return 0.0;
  // seed with a few panels so narrow features are not missed
  const int panels = 8;
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double x0 = a + i * h, x1 = x0 + h, xm = 0.5 * (x0 + x1);
    const double f0 = f(x0), f1 = f(x1), fm = f(xm);
    const double whole = (x1 - x0) / 6.0 * (f0 + 4.0 * fm + f1);
    total += simpson_recurse(f, x0, x1, f0, fm, f1, whole, tol / panels, depth);
  }
  return total;
}

}  // namespace quad

// Weights for intensity_mass: e^{-theta t}, the slope-cap indicator
// 1{x < cap * t} applied inside the x-interval, or 1.
struct ExpWeight {
  double theta;
};
struct SlopeCapWeight {
  double cap;
};
struct UnitWeight {};
using IntensityWeight = std::variant<ExpWeight, SlopeCapWeight, UnitWeight>;

// Mass of the face-process intensity over a rectangle:
//   integral_{t1}^{t2} w(t) [F_t(x2) - F_t(x1)] dt / t
// computed in the log-t variable (which absorbs the 1/t factor), relative
// error ~1e-7. For the slope-cap weight the x-interval is intersected with
// (-inf, cap * t) inside the integrand.
inline double intensity_mass(const LevyModel& model, double t1, double t2, double x1, double x2,
                             const IntensityWeight& weight) {
  if (!(t1 > 0.0)) throw std::domain_error("intensity_mass: t1 must be > 0 (integrand ~ 1/t)");
  if (!(t2 > t1)) throw std::domain_error("intensity_mass: need t1 < t2");
  if (!(x2 >= x1)) throw std::domain_error("intensity_mass: need x1 <= x2");
  if (x1 == x2) return 0.0;
  if (!model.has_cdf()) throw unsupported_cdf("intensity_mass: no CDF for " + model.name());

  const auto integrand_t = [&](double t) -> double {
    double lo = x1, hi = x2;
    double w = 1.0;
    if (const auto* e = std::get_if<ExpWeight>(&weight)) {
      w = std::exp(-e->theta * t);
    } else if (const auto* s = std::get_if<SlopeCapWeight>(&weight)) {
      const double cut = s->cap * t;
      hi = std::min(hi, cut);
      if (!(hi > lo)) return 0.0;
    }
    const double mass = model.marginal_cdf(t, hi) - model.marginal_cdf(t, lo);
    return w * mass;
  };
  // u = log t, du = dt / t
  const auto integrand_u = [&](double u) { return integrand_t(std::exp(u)); };
  const double a = std::log(t1), b = std::log(t2);
  // scale the tolerance by a crude magnitude probe
  double probe = 0.0;
  for (int i = 0; i <= 8; ++i) probe = std::max(probe, std::abs(integrand_u(a + (b - a) * i / 8.0)));
  const double tol = std::max(probe * (b - a), 1e-300) * 1e-8;
  return quad::adaptive_simpson(integrand_u, a, b, tol);
}

}  // namespace levy

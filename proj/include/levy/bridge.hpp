#pragma once

#include <cmath>
#include <stdexcept>

#include "levy/grid_path.hpp"
#include "levy/minorant.hpp"
#include "levy/rng.hpp"

namespace levy {

// Exact minimum of a Brownian bridge over one grid step, plus the exact
// location of that minimum. Used to remove discretization bias from
// path-minimum functionals: the skeleton values plus per-step bridge minima
// reproduce the continuous-time minimum law exactly.

// Inverse-CDF draw of the bridge minimum: the bridge runs from x0 to x1
// over a step of length len with volatility sigma, and
// P(min < m) = exp(-2 (x0 - m)(x1 - m) / (sigma^2 len)).
inline double bridge_min_value(double x0, double x1, double len, double sigma, double u01) {
  const double q = -0.5 * sigma * sigma * len * std::log(u01);
  const double diff = x0 - x1;
  return 0.5 * (x0 + x1 - std::sqrt(diff * diff + 4.0 * q));
}

// Inverse Gaussian IG(mu, lambda), Michael-Schucany-Haas.
inline double inverse_gaussian(double mu, double lambda, RngStream& rng) {
  const double nu = rng.normal();
  const double y = nu * nu;
  const double x =
      mu + 0.5 * mu * mu * y / lambda -
      0.5 * mu / lambda * std::sqrt(4.0 * mu * lambda * y + mu * mu * y * y);
  const double u = rng.uniform01();
  if (u <= mu / (mu + x)) return x;
  return mu * mu / x;
}

// Location of the bridge minimum given its value m. With A = x0 - m,
// B = x1 - m, the location tau/len has density proportional to
//   xi^{-3/2} (1-xi)^{-3/2} exp(-p/xi - q/(1-xi)),
// p = A^2/(2 sigma^2 len), q = B^2/(2 sigma^2 len), which is an explicit
// two-component inverse-Gaussian mixture in y = (1-xi)/xi.
inline double bridge_min_location(double x0, double x1, double m, double len, double sigma,
                                  RngStream& rng) {
  const double a = x0 - m, b = x1 - m;
  const double denom = 2.0 * sigma * sigma * len;
  const double p = a * a / denom, q = b * b / denom;
  if (p <= 1e-300) return 0.0;   // minimum pinned at the left endpoint
  if (q <= 1e-300) return len;   // pinned at the right endpoint
  const double sp = std::sqrt(p), sq = std::sqrt(q);
  double y;
  if (rng.uniform01() < sp / (sp + sq)) {
    y = inverse_gaussian(sq / sp, 2.0 * q, rng);
  } else {
    y = 1.0 / inverse_gaussian(sp / sq, 2.0 * p, rng);
  }
  return len / (1.0 + y);
}

// Exact (location, value) of the continuous-time minimum of a Brownian
// path given its grid skeleton: draw each step's bridge minimum, take the
// winning step, then draw the within-step location. Drift enters only
// through the skeleton; conditional bridges have volatility sigma.
inline PathMin refined_min(const GridPath& path, double sigma, RngStream& rng) {
  const std::size_t n = path.n_steps();
  double best = path.values[0] + 1.0;
  std::size_t best_step = 0;
  double best_m = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double m = bridge_min_value(path.values[k], path.values[k + 1], path.dt, sigma,
                                      rng.uniform_open());
    if (m <= best) {
      best = m;
      best_step = k;
      best_m = m;
    }
  }
  const double tau = bridge_min_location(path.values[best_step], path.values[best_step + 1],
                                         best_m, path.dt, sigma, rng);
  PathMin out;
  out.index = best_step;
  out.value = best_m;
  out.time = path.time(best_step) + tau;
  return out;
}

}  // namespace levy

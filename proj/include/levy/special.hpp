#pragma once

#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace levy {

inline constexpr double kPi = 3.14159265358979323846;

inline double norm_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

inline double norm_pdf(double z) {
  return std::exp(-0.5 * z * z) / std::sqrt(2.0 * kPi);
}

// E[ e^{beta Z} 1{Z <= 0} ] for Z ~ N(mu, s^2)
inline double truncated_exp_moment(double beta, double mu, double s) {
  return std::exp(beta * mu + 0.5 * beta * beta * s * s) *
         norm_cdf(-mu / s - beta * s);
}

// P(Gamma(shape, rate 1) <= x)
inline double gamma_cdf(double shape, double x) {
  if (x <= 0.0) return 0.0;
  return boost::math::gamma_p(shape, x);
}

// chi-square survival function
inline double chi_square_sf(double x, double dof) {
  if (x <= 0.0) return 1.0;
  return boost::math::gamma_q(0.5 * dof, 0.5 * x);
}

// Kolmogorov distribution survival function Q(lambda) = 2 sum (-1)^{j-1} e^{-2 j^2 lambda^2}
inline double kolmogorov_sf(double lambda) {
  if (lambda < 1e-8) return 1.0;
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 200; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += sign * term;
    if (term < 1e-16 * (std::abs(sum) + 1e-300)) break;
    sign = -sign;
  }
  const double q = 2.0 * sum;
  if (q < 0.0) return 0.0;
  if (q > 1.0) return 1.0;
  return q;
}

// CDF of the one-sided stable-1/2 law (Levy distribution with scale c)
inline double levy_cdf(double scale, double x) {
  if (x <= 0.0) return 0.0;
  return std::erfc(std::sqrt(scale / (2.0 * x)));
}

// arcsine law on [0,1], i.e. Beta(1/2, 1/2)
inline double arcsine_cdf(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return 2.0 / kPi * std::asin(std::sqrt(x));
}

inline double harmonic(int n) {
  double h = 0.0;
  for (int k = 1; k <= n; ++k) h += 1.0 / k;
  return h;
}

}  // namespace levy

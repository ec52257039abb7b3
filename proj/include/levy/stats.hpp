#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "levy/special.hpp"

namespace levy {

struct KsResult {
  double statistic = 0.0;
  double p_value = 0.0;
};

namespace detail {
// finite-sample correction from Numerical Recipes
inline double ks_p_from(double d, double n_eff) {
  const double s = std::sqrt(n_eff);
  return kolmogorov_sf((s + 0.12 + 0.11 / s) * d);
}
}  // namespace detail

inline KsResult ks_one_sample(std::vector<double> samples,
                              const std::function<double(double)>& cdf) {
  if (samples.size() < 30) throw std::invalid_argument("ks_one_sample: need at least 30 samples");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return {d, detail::ks_p_from(d, n)};
}

inline KsResult ks_two_sample(std::vector<double> a, std::vector<double> b) {
  if (a.size() < 30 || b.size() < 30)
    throw std::invalid_argument("ks_two_sample: need at least 30 samples each");
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  double d = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  const double n_eff = na * nb / (na + nb);
  return {d, detail::ks_p_from(d, n_eff)};
}

struct ChiSquareResult {
  double statistic = 0.0;
  double p_value = 0.0;
  double dof = 0.0;
};

// goodness of fit against equal cell probabilities
inline ChiSquareResult chi_square_uniform(const std::vector<std::size_t>& counts) {
  if (counts.size() < 2) throw std::invalid_argument("chi_square_uniform: need >= 2 cells");
  double total = 0.0;
  for (auto c : counts) total += static_cast<double>(c);
  const double expected = total / static_cast<double>(counts.size());
  double stat = 0.0;
  for (auto c : counts) {
    const double diff = static_cast<double>(c) - expected;
    stat += diff * diff / expected;
  }
  const double dof = static_cast<double>(counts.size() - 1);
  return {stat, chi_square_sf(stat, dof), dof};
}

namespace detail {
inline std::vector<int> quartile_bins(const std::vector<double>& x) {
  std::vector<double> sorted = x;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  const double q1 = sorted[n / 4], q2 = sorted[n / 2], q3 = sorted[3 * n / 4];
  std::vector<int> bins(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double v = x[i];
    bins[i] = v <= q1 ? 0 : v <= q2 ? 1 : v <= q3 ? 2 : 3;
  }
  return bins;
}
}  // namespace detail

// independence test on a 4x4 quantile-binned contingency table, dof = 9
inline ChiSquareResult chi_square_independence(const std::vector<double>& x,
                                               const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 64)
    throw std::invalid_argument("chi_square_independence: need matched samples, n >= 64");
  const auto bx = detail::quartile_bins(x);
  const auto by = detail::quartile_bins(y);
  double table[4][4] = {};
  double row[4] = {}, col[4] = {};
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    table[bx[i]][by[i]] += 1.0;
    row[bx[i]] += 1.0;
    col[by[i]] += 1.0;
  }
  double stat = 0.0;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const double e = row[r] * col[c] / n;
      const double diff = table[r][c] - e;
      stat += diff * diff / e;
    }
  return {stat, chi_square_sf(stat, 9.0), 9.0};
}

namespace detail {
inline std::vector<double> ranks(const std::vector<double>& x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> r(x.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && x[order[j + 1]] == x[order[i]]) ++j;
    const double mid = 0.5 * static_cast<double>(i + j) + 1.0;  // average rank for ties
    for (std::size_t k = i; k <= j; ++k) r[order[k]] = mid;
    i = j + 1;
  }
  return r;
}
}  // namespace detail

// Spearman rank correlation with its normal-approximation z-score
struct SpearmanResult {
  double rho = 0.0;
  double z = 0.0;
};

inline SpearmanResult spearman(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 10)
    throw std::invalid_argument("spearman: need matched samples, n >= 10");
  const auto rx = detail::ranks(x);
  const auto ry = detail::ranks(y);
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += rx[i];
    my += ry[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  const double rho = sxy / std::sqrt(sxx * syy);
  return {rho, rho * std::sqrt(n - 1.0)};
}

inline double mean(const std::vector<double>& x) {
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

inline double variance(const std::vector<double>& x) {
  const double m = mean(x);
  double s = 0.0;
  for (double v : x) s += (v - m) * (v - m);
  return s / static_cast<double>(x.size() - 1);
}

// z-score of a sample mean against a target, using the empirical variance
inline double mean_z_score(const std::vector<double>& x, double target) {
  const double se = std::sqrt(variance(x) / static_cast<double>(x.size()));
  return (mean(x) - target) / se;
}

}  // namespace levy

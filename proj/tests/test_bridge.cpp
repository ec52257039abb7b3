#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "levy/bridge.hpp"
#include "levy/models.hpp"
#include "levy/rng.hpp"
#include "levy/special.hpp"
#include "levy/stats.hpp"

using levy::RngStream;

TEST_CASE("bridge minimum never exceeds the endpoints") {
  RngStream rng(401, 0);
  for (int i = 0; i < 10000; ++i) {
    const double x0 = rng.normal(), x1 = rng.normal();
    const double m = levy::bridge_min_value(x0, x1, 0.25, 1.0, rng.uniform_open());
    REQUIRE(m <= std::min(x0, x1) + 1e-14);
  }
}

TEST_CASE("bridge minimum matches its closed-form law") {
  // P(min < m) = exp(-2 (x0-m)(x1-m) / (sigma^2 len))
  const double x0 = 0.2, x1 = -0.3, len = 0.5, sigma = 1.3;
  RngStream rng(403, 0);
  std::vector<double> ms(40000);
  for (double& m : ms) m = levy::bridge_min_value(x0, x1, len, sigma, rng.uniform_open());
  const auto cdf = [&](double m) {
    if (m >= std::min(x0, x1)) return 1.0;
    return std::exp(-2.0 * (x0 - m) * (x1 - m) / (sigma * sigma * len));
  };
  REQUIRE(levy::ks_one_sample(ms, cdf).p_value > 0.01);
}

TEST_CASE("inverse Gaussian sampler has the right mean and matches moments") {
  RngStream rng(405, 0);
  const double mu = 0.7, lambda = 2.3;
  const int n = 200000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = levy::inverse_gaussian(mu, lambda, rng);
    REQUIRE(x > 0.0);
    sum += x;
    sumsq += x * x;
  }
  const double m = sum / n;
  const double var_hat = sumsq / n - m * m;
  const double var_th = mu * mu * mu / lambda;
  REQUIRE(std::abs(m - mu) < 4.0 * std::sqrt(var_th / n));
  REQUIRE(std::abs(var_hat - var_th) < 0.05 * var_th);
}

TEST_CASE("argmin of a zero-to-zero bridge is uniform") {
  // Vervaat: the location of the minimum of a Brownian bridge is U(0,1)
  RngStream rng(407, 0);
  std::vector<double> taus(30000);
  for (double& tau : taus) {
    const double m = levy::bridge_min_value(0.0, 0.0, 1.0, 1.0, rng.uniform_open());
    tau = levy::bridge_min_location(0.0, 0.0, m, 1.0, 1.0, rng);
  }
  const auto ks =
      levy::ks_one_sample(taus, [](double t) { return t < 0 ? 0.0 : t > 1 ? 1.0 : t; });
  REQUIRE(ks.p_value > 0.01);
}

TEST_CASE("refined minimum of a driftless Brownian path is arcsine-distributed") {
  const auto model = levy::LevyModel::brownian(1.0, 0.0);
  const std::size_t reps = 20000;
  std::vector<double> rho(reps), mins(reps);
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    RngStream rng(409, rep);
    const auto path = model.path_sample(1.0, 64, rng);
    const auto pm = levy::refined_min(path, 1.0, rng);
    rho[rep] = pm.time;
    mins[rep] = pm.value;
    REQUIRE(pm.value <= 0.0);
    REQUIRE(pm.time >= 0.0);
    REQUIRE(pm.time <= 1.0);
  }
  CHECK(levy::ks_one_sample(rho, [](double t) { return levy::arcsine_cdf(t); }).p_value > 0.01);
  // |min| of BM on [0,1] is |N(0,1)| by reflection
  CHECK(levy::ks_one_sample(mins, [](double t) {
          return t >= 0 ? 1.0 : 2.0 * levy::norm_cdf(t);
        }).p_value > 0.01);
}

TEST_CASE("refined minimum is grid-robust: coarse and fine skeletons agree") {
  const auto model = levy::LevyModel::brownian(1.0, 0.0);
  const std::size_t reps = 8000;
  std::vector<double> coarse(reps), fine(reps);
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    RngStream r1(411, rep), r2(413, rep);
    coarse[rep] = levy::refined_min(model.path_sample(1.0, 16, r1), 1.0, r1).time;
    fine[rep] = levy::refined_min(model.path_sample(1.0, 1024, r2), 1.0, r2).time;
  }
  REQUIRE(levy::ks_two_sample(coarse, fine).p_value > 0.01);
}

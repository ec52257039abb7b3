#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>

#include "levy/intensity.hpp"
#include "levy/models.hpp"
#include "levy/rng.hpp"

using levy::LevyModel;

TEST_CASE("degenerate x-interval has zero mass") {
  const auto model = LevyModel::brownian(1.0, 0.0);
  CHECK(levy::intensity_mass(model, 0.5, 1.5, 0.3, 0.3, levy::UnitWeight{}) == 0.0);
}

TEST_CASE("unit weight over the whole line integrates dt/t") {
  const auto model = LevyModel::brownian(1.0, 0.0);
  const double inf = std::numeric_limits<double>::infinity();
  const double v = levy::intensity_mass(model, 0.25, 4.0, -inf, inf, levy::UnitWeight{});
  REQUIRE(std::abs(v - std::log(16.0)) < 1e-6 * std::log(16.0));
}

TEST_CASE("preconditions") {
  const auto model = LevyModel::brownian(1.0, 0.0);
  CHECK_THROWS_AS(levy::intensity_mass(model, 0.0, 1.0, 0.0, 1.0, levy::UnitWeight{}),
                  std::domain_error);
  CHECK_THROWS_AS(levy::intensity_mass(model, 1.0, 0.5, 0.0, 1.0, levy::UnitWeight{}),
                  std::domain_error);
  CHECK_THROWS_AS(
      levy::intensity_mass(LevyModel::stable(1.7, 0.0, 1.0), 0.5, 1.0, 0.0, 1.0,
                           levy::UnitWeight{}),
      levy::unsupported_cdf);
}

TEST_CASE("exponential-weight mass agrees with an independent MC integration") {
  // sample (t, X_t) from the sampler itself: checks quadrature, CDF and
  // sampler against each other through a different route
  const auto model = LevyModel::brownian(1.0, 0.0);
  const double t1 = 0.5, t2 = 1.5, x1 = -1.0, x2 = 0.0, theta = 1.0;
  const double quad = levy::intensity_mass(model, t1, t2, x1, x2, levy::ExpWeight{theta});

  levy::RngStream rng(301, 0);
  const int n = 1000000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = rng.uniform(t1, t2);
    const double x = model.increment_sample(t, rng);
    const double v = (x > x1 && x <= x2) ? std::exp(-theta * t) / t : 0.0;
    sum += v;
    sumsq += v * v;
  }
  const double m = (t2 - t1) * sum / n;
  const double se = (t2 - t1) * std::sqrt((sumsq / n - (sum / n) * (sum / n)) / n);
  REQUIRE(std::abs(m - quad) < 4.0 * se);
}

TEST_CASE("slope-cap weight intersects the x-interval with x < cap*t") {
  const auto model = LevyModel::brownian(1.0, 1.0);
  const double inf = std::numeric_limits<double>::infinity();
  // cap 0: mass of negative-increment faces
  const double v = levy::intensity_mass(model, 0.5, 2.0, -inf, inf, levy::SlopeCapWeight{0.0});
  // reference: integral of F_t(0)/t dt via the unit weight on (-inf, 0)
  const double ref = levy::intensity_mass(model, 0.5, 2.0, -inf, 0.0, levy::UnitWeight{});
  REQUIRE(std::abs(v - ref) < 1e-9);
  // a negative cap cuts strictly more mass
  const double v2 = levy::intensity_mass(model, 0.5, 2.0, -inf, inf, levy::SlopeCapWeight{-0.5});
  REQUIRE(v2 < v);
}

TEST_CASE("mass is additive over disjoint x-intervals") {
  const auto model = LevyModel::cauchy(1.0);
  const double a = levy::intensity_mass(model, 0.3, 2.0, -1.0, 0.0, levy::ExpWeight{0.7});
  const double b = levy::intensity_mass(model, 0.3, 2.0, 0.0, 2.0, levy::ExpWeight{0.7});
  const double ab = levy::intensity_mass(model, 0.3, 2.0, -1.0, 2.0, levy::ExpWeight{0.7});
  REQUIRE(std::abs(a + b - ab) < 1e-7 * ab);
}

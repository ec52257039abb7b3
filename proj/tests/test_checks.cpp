#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "levy/checks.hpp"

namespace checks = levy::checks;

namespace {
constexpr std::uint64_t kSeed = 20110211;
constexpr unsigned kJobs = 2;

bool all_pass(const std::vector<levy::TestReport>& reports) {
  for (const auto& r : reports)
    if (!r.pass) return false;
  return !reports.empty();
}
}  // namespace

TEST_CASE("chord probability is 1/n for Gaussian and Cauchy walks") {
  const auto reports = checks::chord_probability(kSeed, kJobs, 20000);
  REQUIRE(reports.size() == 6);
  CHECK(all_pass(reports));
}

TEST_CASE("discrete face length is uniform on the 16-cell grid") {
  CHECK(all_pass(checks::discrete_uniform_face(kSeed, kJobs, 20000)));
}

TEST_CASE("face count matches harmonic numbers; n=3 enumeration is exact") {
  CHECK(all_pass(checks::face_count(kSeed, kJobs, 20000)));
  CHECK(checks::face_count_exact_n3(kSeed));
  CHECK(checks::face_count_exact_n3(kSeed + 1));
  CHECK(checks::face_count_exact_n3(kSeed + 2));
}

TEST_CASE("single-step walks have exactly one face") {
  const auto reports = checks::face_count(kSeed, kJobs, 500, 1);
  for (const auto& r : reports) REQUIRE(r.statistic == 1.0);
}

TEST_CASE("U-face lengths are uniform at both grid resolutions") {
  CHECK(all_pass(checks::uniform_face_length(kSeed, kJobs, 1200)));
}

TEST_CASE("stick-breaking law of the U-face per family") {
  CHECK(all_pass(checks::theorem1(kSeed, kJobs, 1200)));
}

TEST_CASE("exponential-horizon counts are Poisson with the quadrature mean") {
  CHECK(all_pass(checks::poisson_ppp(kSeed, kJobs, 4000)));
}

TEST_CASE("double-Laplace identity: MC vs quadrature, plus closed forms") {
  const auto model = levy::LevyModel::brownian(1.0, 0.0);
  const auto res =
      checks::pecherskii_rogozin_estimate(1.0, 0.5, 0.3, 0.0, model, kSeed, kJobs, 50000);
  CHECK(res.rel_err < 0.02);
  // beta = 0 collapses to E e^{-alpha rho} = sqrt(theta/(theta+alpha))
  const auto res0 =
      checks::pecherskii_rogozin_estimate(1.0, 0.5, 0.0, 0.0, model, kSeed, kJobs, 2000);
  CHECK(std::abs(res0.quadrature - std::sqrt(1.0 / 1.5)) < 1e-6);
  CHECK(std::abs(res0.mc - res0.quadrature) < 4.0 * res0.mc_se);
  // alpha = beta = 0 is the exact identity 1 = 1
  const auto res1 =
      checks::pecherskii_rogozin_estimate(1.0, 0.0, 0.0, 0.0, model, kSeed, kJobs, 500);
  CHECK(res1.mc == 1.0);
  CHECK(std::abs(res1.quadrature - 1.0) < 1e-12);
  // monotone decay in alpha
  const auto lo =
      checks::pecherskii_rogozin_estimate(1.0, 0.25, 0.0, 0.0, model, kSeed, kJobs, 500);
  const auto hi =
      checks::pecherskii_rogozin_estimate(1.0, 4.0, 0.0, 0.0, model, kSeed, kJobs, 500);
  CHECK(hi.quadrature < lo.quadrature);
  CHECK_THROWS_AS(checks::pecherskii_rogozin_estimate(1.0, 0.5, 0.3, 0.0,
                                                      levy::LevyModel::cauchy(1.0), kSeed, kJobs,
                                                      100),
                  levy::unsupported_cdf);
}

TEST_CASE("Cauchy length-slope independence, with the Brownian negative control") {
  const auto reports = checks::cauchy_independence(kSeed, kJobs, 4000, 1024);
  REQUIRE(reports.size() == 2);
  CHECK(all_pass(reports));
  CHECK(reports[1].negative_control);
}

TEST_CASE("slope-passage marginals match the normalized-Gamma oracle") {
  CHECK(all_pass(checks::cauchy_gamma(kSeed, kJobs, 3000, 4096)));
}

TEST_CASE("excursion functionals match Vervaat-transformed Knight bridges") {
  CHECK(all_pass(checks::excursion_law(kSeed, kJobs, 1200)));
}

TEST_CASE("argmin support: arcsine law, bin positivity, increasing-path control") {
  CHECK(all_pass(checks::argmin_support(kSeed, kJobs, 20000)));
}

TEST_CASE("slope counts in a band match the intensity quadrature") {
  CHECK(all_pass(checks::stable_slope_count(kSeed, kJobs, 3000, 4096)));
}

TEST_CASE("regularity integral: divergence flags per family") {
  const auto reports = checks::rogozin_regularity(kSeed, kJobs);
  REQUIRE(reports.size() == 3);
  CHECK(all_pass(reports));
  const auto g = checks::rogozin_integral(levy::LevyModel::gamma_subordinator());
  CHECK(g.value == 0.0);
  CHECK_FALSE(g.divergent);
  const auto c = checks::rogozin_integral(levy::LevyModel::cauchy(1.0), 1e-4);
  // symmetric marginals: the truncated integral is log(1/t_min)/2
  CHECK(std::abs(c.value - 0.5 * std::log(1e4)) < 1e-4);
  CHECK(c.divergent);
}

TEST_CASE("infinite-horizon face counts match the capped intensity") {
  CHECK(all_pass(checks::infinite_horizon(kSeed, kJobs, 150)));
}

TEST_CASE("catalog names are unique and runnable order is fixed") {
  const auto& cat = checks::catalog();
  REQUIRE(cat.size() == 14);
  REQUIRE(std::string(cat.front().name) == "chord_probability");
  REQUIRE(std::string(cat.back().name) == "infinite_horizon");
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i + 1; j < cat.size(); ++j)
      REQUIRE(std::string(cat[i].name) != cat[j].name);
}

TEST_CASE("reports are reproducible and job-count independent") {
  const auto a = checks::poisson_ppp(kSeed, 1, 500);
  const auto b = checks::poisson_ppp(kSeed, 4, 500);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].statistic == b[i].statistic);
    REQUIRE(a[i].pass == b[i].pass);
  }
  const auto c = checks::poisson_ppp(kSeed + 1, 1, 500);
  REQUIRE(c[0].statistic != a[0].statistic);
}

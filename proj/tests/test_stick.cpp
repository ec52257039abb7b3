#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "levy/minorant.hpp"
#include "levy/models.hpp"
#include "levy/rng.hpp"
#include "levy/special.hpp"
#include "levy/stats.hpp"
#include "levy/stick_breaking.hpp"

using levy::LevyModel;
using levy::RngStream;

TEST_CASE("stick recursion with forced V = (1/2, 1/2, 1/2)") {
  // L_1 = t V_1 and L_{i+1} = V_{i+1} (t - S_i), checked by direct recursion
  double remaining = 1.0;
  std::vector<double> lengths;
  for (int i = 0; i < 3; ++i) {
    lengths.push_back(0.5 * remaining);
    remaining -= lengths.back();
  }
  CHECK(lengths[0] == 0.5);
  CHECK(lengths[1] == 0.25);
  CHECK(lengths[2] == 0.125);
}

TEST_CASE("stick invariants: positive lengths, S_i below t via the residual") {
  // S_i < t strictly in exact arithmetic; at double precision the strict
  // gap lives in the residual, which stays positive by construction
  RngStream rng(211, 0);
  for (int rep = 0; rep < 200; ++rep) {
    const auto sb = levy::stick_break(2.5, 32, rng);
    REQUIRE(sb.partial_sums.size() == 32);
    for (std::size_t i = 0; i + 1 < sb.partial_sums.size(); ++i)
      REQUIRE(sb.partial_sums[i] <= sb.partial_sums[i + 1]);
    for (double l : sb.lengths) REQUIRE(l > 0.0);
    REQUIRE(sb.residual > 0.0);
    REQUIRE(sb.partial_sums.back() <= sb.t);
    // early sums are far from saturation and strictly increase
    for (std::size_t i = 0; i + 1 < 12; ++i)
      REQUIRE(sb.partial_sums[i] < sb.partial_sums[i + 1]);
    REQUIRE(sb.lengths[0] == sb.t * sb.uniforms[0]);
  }
}

TEST_CASE("stick residual equals t times the product of (1 - V_i)") {
  RngStream rng(213, 0);
  for (int rep = 0; rep < 500; ++rep) {
    const auto sb = levy::stick_break(1.0, 64, rng);
    double prod = sb.t;
    for (double v : sb.uniforms) prod *= (1.0 - v);
    REQUIRE(std::abs(sb.residual - prod) <= 1e-12 * std::max(prod, 1e-300));
    REQUIRE(sb.residual > 0.0);
  }
}

TEST_CASE("E L_1 = t/2 by Monte Carlo") {
  RngStream rng(217, 0);
  const int n = 100000;
  double sum = 0.0, sumsq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double l1 = levy::stick_break(3.0, 1, rng).lengths[0];
    sum += l1;
    sumsq += l1 * l1;
  }
  const double m = sum / n;
  const double se = std::sqrt((sumsq / n - m * m) / n);
  REQUIRE(std::abs(m - 1.5) < 4.0 * se);
}

TEST_CASE("theorem1_sample: L_1 uniform and Y_1/sqrt(L_1) standard normal") {
  const auto model = LevyModel::brownian(1.0, 0.0);
  const std::size_t reps = 20000;
  std::vector<double> l1(reps), zed(reps);
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    RngStream rng(219, rep);
    const auto pts = levy::theorem1_sample(model, 1.0, 1, rng);
    l1[rep] = pts[0].length;
    zed[rep] = pts[0].increment / std::sqrt(pts[0].length);
  }
  CHECK(levy::ks_one_sample(l1, [](double t) { return t < 0 ? 0.0 : t > 1 ? 1.0 : t; }).p_value >
        0.01);
  CHECK(levy::ks_one_sample(zed, [](double t) { return levy::norm_cdf(t); }).p_value > 0.01);
}

TEST_CASE("theorem1_sample delegates with forced lengths") {
  const auto model = LevyModel::gamma_subordinator();
  RngStream a(221, 0), b(221, 0);
  const auto pts = levy::theorem1_sample(model, 1.0, 4, a);
  // replay: the first four draws of b are the stick uniforms
  const auto sb = levy::stick_break(1.0, 4, b);
  for (std::size_t i = 0; i < 4; ++i) {
    REQUIRE(pts[i].length == sb.lengths[i]);
    REQUIRE(pts[i].increment == model.increment_sample(sb.lengths[i], b));
  }
}

TEST_CASE("Cauchy slopes are independent of lengths in theorem1_sample") {
  const auto model = LevyModel::cauchy(1.0);
  const std::size_t reps = 20000;
  std::vector<double> lengths(reps), slopes(reps);
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    RngStream rng(223, rep);
    const auto pts = levy::theorem1_sample(model, 1.0, 1, rng);
    lengths[rep] = pts[0].length;
    slopes[rep] = pts[0].slope();
  }
  REQUIRE(std::abs(levy::spearman(lengths, slopes).z) < 4.0);
}

TEST_CASE("minorant_from_points sorts by slope and cumulates") {
  std::vector<levy::FacePoint> pts = {{0.5, 1.0}, {0.5, -1.0}};
  const auto dec = levy::minorant_from_points(pts);
  REQUIRE(dec.faces.size() == 2);
  CHECK(dec.faces[0].g == 0.0);
  CHECK(dec.faces[0].d == 0.5);
  CHECK(dec.faces[0].increment == -1.0);
  CHECK(dec.faces[0].slope == -2.0);
  CHECK(dec.faces[1].slope == 2.0);
  CHECK(dec.vertex_values.back() == 0.0);

  const auto single = levy::minorant_from_points({{0.7, 0.3}});
  REQUIRE(single.faces.size() == 1);

  CHECK_THROWS_AS(levy::minorant_from_points({{0.5, 1.0}, {0.5, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(levy::minorant_from_points({{0.0, 1.0}}), std::invalid_argument);
}

TEST_CASE("round trip: stick sample to decomposition satisfies the invariants") {
  const auto model = LevyModel::cauchy(1.0);
  for (std::uint64_t rep = 0; rep < 50; ++rep) {
    RngStream rng(227, rep);
    const auto pts = levy::theorem1_sample(model, 1.0, 50, rng);
    const auto dec = levy::minorant_from_points(pts);
    REQUIRE(dec.faces.size() == 50);
    for (std::size_t j = 0; j + 1 < dec.faces.size(); ++j) {
      REQUIRE(dec.faces[j].slope < dec.faces[j + 1].slope);
      REQUIRE(dec.faces[j].d == dec.faces[j + 1].g);
    }
  }
}

TEST_CASE("exponential horizon: mean of T and fixed-seed reproducibility") {
  const auto model = LevyModel::brownian(1.0, 0.0);
  double sum = 0.0;
  const int reps = 100000;
  for (std::uint64_t rep = 0; rep < reps; ++rep) {
    RngStream rng(229, rep);
    sum += levy::ppp_exponential_horizon(model, 1.0, 1, rng).first;
  }
  REQUIRE(std::abs(sum / reps - 1.0) < 4.0 / std::sqrt(static_cast<double>(reps)));
  RngStream a(231, 5), b(231, 5);
  const auto pa = levy::ppp_exponential_horizon(model, 2.0, 8, a);
  const auto pb = levy::ppp_exponential_horizon(model, 2.0, 8, b);
  REQUIRE(pa.first == pb.first);
  for (std::size_t i = 0; i < 8; ++i) REQUIRE(pa.second[i].increment == pb.second[i].increment);
}

TEST_CASE("infinite horizon: preconditions and the increasing-path case") {
  RngStream rng(233, 0);
  const auto cauchy = LevyModel::cauchy(1.0);
  CHECK_THROWS_AS(levy::infinite_horizon_points(cauchy, 0.0, 8.0, 256, rng), std::domain_error);
  const auto brown = LevyModel::brownian(1.0, 1.0);
  CHECK_THROWS_AS(levy::infinite_horizon_points(brown, 1.5, 8.0, 256, rng), std::domain_error);
  // Gamma subordinator paths increase: finitely many faces below any cap,
  // and all face increments are positive
  const auto gamma = LevyModel::gamma_subordinator();
  for (std::uint64_t rep = 0; rep < 20; ++rep) {
    RngStream r2(235, rep);
    const auto pts = levy::infinite_horizon_points(gamma, 2.0, 8.0, 1024, r2);
    for (const auto& p : pts) REQUIRE(p.increment > 0.0);
    REQUIRE(pts.size() <= 1024);
  }
}

#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "levy/minorant.hpp"
#include "levy/models.hpp"
#include "levy/rng.hpp"

namespace levy {

// Uniform stick-breaking of [0, t]: L_1 = t V_1, L_{i+1} = V_{i+1} (t - S_i).
// The residual t - S_n is maintained recursively so it stays accurate in
// relative terms even when it is ~2^-n of t.
struct StickBreak {
  double t = 0.0;
  std::vector<double> uniforms;
  std::vector<double> lengths;
  std::vector<double> partial_sums;
  double residual = 0.0;

  std::size_t n_sticks() const { return lengths.size(); }
};

inline StickBreak stick_break(double t, std::size_t n_sticks, RngStream& rng) {
  if (!(t > 0.0)) throw std::domain_error("stick_break: t must be > 0");
  if (n_sticks < 1) throw std::domain_error("stick_break: n_sticks must be >= 1");
  StickBreak sb;
  sb.t = t;
  sb.uniforms.reserve(n_sticks);
  sb.lengths.reserve(n_sticks);
  sb.partial_sums.reserve(n_sticks);
  double remaining = t;
  for (std::size_t i = 0; i < n_sticks; ++i) {
    const double v = rng.uniform_open();
    const double len = v * remaining;
    // multiplicative residual keeps t - S_i accurate in relative terms,
    // which the subtraction chain loses when some v is close to 1
    remaining *= (1.0 - v);
    sb.uniforms.push_back(v);
    sb.lengths.push_back(len);
    sb.partial_sums.push_back(t - remaining);
  }
  sb.residual = remaining;
  return sb;
}

// One atom of the face point process: a stick length with the increment of
// an independent copy of X over that length.
struct FacePoint {
  double length = 0.0;
  double increment = 0.0;
  double slope() const { return increment / length; }
};

// Pairs (L_i, Y_i) with Y_i | L distributed as X_{L_i}, conditionally
// independent given L. Equal in law to the lengths and increments of the
// excursion intervals discovered by uniform sampling.
inline std::vector<FacePoint> theorem1_sample(const LevyModel& model, double t,
                                              std::size_t n_sticks, RngStream& rng) {
  const StickBreak sb = stick_break(t, n_sticks, rng);
  std::vector<FacePoint> points(sb.n_sticks());
  for (std::size_t i = 0; i < points.size(); ++i) {
    points[i].length = sb.lengths[i];
    points[i].increment = model.increment_sample(sb.lengths[i], rng);
  }
  return points;
}

// Arrange face points in order of increasing slope and cumulate into a
// convex piecewise-linear function starting at (0, 0).
inline MinorantDecomposition minorant_from_points(std::vector<FacePoint> points) {
  if (points.empty()) throw std::invalid_argument("minorant_from_points: no points");
  for (const FacePoint& p : points)
    if (!(p.length > 0.0)) throw std::invalid_argument("minorant_from_points: lengths must be > 0");
  std::sort(points.begin(), points.end(),
            [](const FacePoint& a, const FacePoint& b) { return a.slope() < b.slope(); });
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    if (points[i].slope() == points[i + 1].slope())
      throw std::invalid_argument("minorant_from_points: tied slopes");

  MinorantDecomposition dec;
  dec.t0 = 0.0;
  dec.vertex_times.push_back(0.0);
  dec.vertex_values.push_back(0.0);
  for (const FacePoint& p : points) {
    Face f;
    f.g = dec.vertex_times.back();
    f.d = f.g + p.length;
    f.length = p.length;
    f.increment = p.increment;
    f.slope = p.slope();
    dec.faces.push_back(f);
    dec.vertex_times.push_back(f.d);
    dec.vertex_values.push_back(dec.vertex_values.back() + p.increment);
  }
  return dec;
}

// Atoms of the face process on an independent exponential horizon; by the
// stick-breaking description these form (a truncation of) a Poisson point
// process with intensity e^{-theta t} (dt/t) P(X_t in dx).
inline std::pair<double, std::vector<FacePoint>> ppp_exponential_horizon(
    const LevyModel& model, double theta, std::size_t n_sticks, RngStream& rng) {
  if (!(theta > 0.0)) throw std::domain_error("ppp_exponential_horizon: theta must be > 0");
  const double t = rng.exponential(theta);
  return {t, theorem1_sample(model, t, n_sticks, rng)};
}

// Faces of the minorant of a path on [0, t_big] with slope below slope_cap.
// For t_big large these approximate the atoms of the infinite-horizon point
// process with intensity 1{x < a t} (dt/t) P(X_t in dx).
inline std::vector<FacePoint> infinite_horizon_points(const LevyModel& model, double slope_cap,
                                                      double t_big, std::size_t n_grid,
                                                      RngStream& rng) {
  const auto l = model.long_run_slope();
  if (!l) throw std::domain_error("infinite_horizon_points: long-run slope undefined");
  if (!(slope_cap < *l))
    throw std::domain_error("infinite_horizon_points: slope_cap must be below the long-run slope");
  const GridPath path = model.path_sample(t_big, n_grid, rng);
  const MinorantDecomposition dec = convex_minorant(path);
  std::vector<FacePoint> out;
  for (const Face& f : dec.faces)
    if (f.slope < slope_cap) out.push_back({f.length, f.increment});
  return out;
}

}  // namespace levy

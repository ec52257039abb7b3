#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace levy {

// Values of a path on a uniform time grid: value k sits at t0 + k*dt.
// The universal path representation; transforms and hull routines operate
// on the raw value sequence with piecewise-constant semantics between
// grid points.
struct GridPath {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<double> values;

  std::size_t n_steps() const { return values.size() - 1; }
  double duration() const { return static_cast<double>(n_steps()) * dt; }
  double time(std::size_t k) const { return t0 + static_cast<double>(k) * dt; }
  double end() const { return t0 + duration(); }

  void validate() const {
    if (values.size() < 2) throw std::invalid_argument("GridPath needs at least 2 values");
    if (!(dt > 0.0)) throw std::invalid_argument("GridPath dt must be positive");
    for (double v : values)
      if (!std::isfinite(v)) throw std::invalid_argument("GridPath has non-finite value");
  }

  // snap a time to the nearest grid index; throws if off-grid
  std::size_t index_of(double t, double tol_steps = 1e-6) const {
    const double k = (t - t0) / dt;
    const double r = std::round(k);
    if (std::abs(k - r) > tol_steps || r < 0.0 || r > static_cast<double>(n_steps()))
      throw std::invalid_argument("time is not aligned to the path grid");
    return static_cast<std::size_t>(r);
  }
};

}  // namespace levy

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "levy/grid_path.hpp"

namespace levy {

// Query point landed exactly on a vertex of the decomposition. Callers that
// sample random points re-draw on this (probability-zero event in theory).
struct vertex_collision : std::runtime_error {
  explicit vertex_collision(double u)
      : std::runtime_error("query point is a minorant vertex"), u_value(u) {}
  double u_value;
};

// Maximal linear piece of the convex minorant: interval (g, d) with its
// length, increment and slope.
struct Face {
  double g = 0.0;
  double d = 0.0;
  double length = 0.0;
  double increment = 0.0;
  double slope = 0.0;
};

// Ordered faces plus the vertices they connect. vertex_times/values have
// one more entry than faces; faces tile [t0, t0 + duration] and slopes
// strictly increase.
struct MinorantDecomposition {
  double t0 = 0.0;
  std::vector<Face> faces;
  std::vector<double> vertex_times;
  std::vector<double> vertex_values;
  // grid index of each vertex when the decomposition came from a GridPath
  std::vector<std::size_t> vertex_indices;

  double duration() const { return vertex_times.back() - vertex_times.front(); }
  double end() const { return vertex_times.back(); }

  // minorant value by linear interpolation between vertices
  double value_at(double t) const {
    if (t <= vertex_times.front()) return vertex_values.front();
    if (t >= vertex_times.back()) return vertex_values.back();
    auto it = std::upper_bound(vertex_times.begin(), vertex_times.end(), t);
    const std::size_t j = static_cast<std::size_t>(it - vertex_times.begin());
    const double w = (t - vertex_times[j - 1]) / (vertex_times[j] - vertex_times[j - 1]);
    return vertex_values[j - 1] + w * (vertex_values[j] - vertex_values[j - 1]);
  }
};

namespace detail {

// cross product (a->b) x (a->c); positive when b lies strictly below
// the chord a->c (points are (time, value) with increasing time)
inline double hull_cross(double ax, double ay, double bx, double by, double cx, double cy) {
  return (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
}

inline double hull_tolerance(const GridPath& path) {
  double vmax = 0.0;
  for (double v : path.values) vmax = std::max(vmax, std::abs(v));
  return 1e-12 * std::max(1.0, vmax) * std::max(1.0, path.duration());
}

}  // namespace detail

// Lower convex hull of the grid vertices (the convex minorant of the
// polygonal interpolation), O(n) monotone-chain scan. Middle points within
// the collinearity tolerance are not vertices, so face slopes strictly
// increase.
inline MinorantDecomposition convex_minorant(const GridPath& path) {
  path.validate();
  const std::size_t n = path.n_steps();
  const double tol = detail::hull_tolerance(path);

  std::vector<std::size_t> hull;
  hull.reserve(32);
  for (std::size_t k = 0; k <= n; ++k) {
    const double x = static_cast<double>(k) * path.dt;
    const double y = path.values[k];
    while (hull.size() >= 2) {
      const std::size_t a = hull[hull.size() - 2];
      const std::size_t b = hull[hull.size() - 1];
      if (detail::hull_cross(static_cast<double>(a) * path.dt, path.values[a],
                             static_cast<double>(b) * path.dt, path.values[b], x, y) <= tol)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(k);
  }

  MinorantDecomposition dec;
  dec.t0 = path.t0;
  dec.vertex_indices = hull;
  dec.vertex_times.reserve(hull.size());
  dec.vertex_values.reserve(hull.size());
  for (std::size_t idx : hull) {
    dec.vertex_times.push_back(path.time(idx));
    dec.vertex_values.push_back(path.values[idx]);
  }
  dec.faces.reserve(hull.size() - 1);
  for (std::size_t j = 0; j + 1 < hull.size(); ++j) {
    Face f;
    f.g = dec.vertex_times[j];
    f.d = dec.vertex_times[j + 1];
    f.length = static_cast<double>(hull[j + 1] - hull[j]) * path.dt;
    f.increment = dec.vertex_values[j + 1] - dec.vertex_values[j];
    f.slope = f.increment / f.length;
    dec.faces.push_back(f);
  }
  return dec;
}

// Face with g < u <= d (left-open/right-closed). Throws vertex_collision
// when u coincides with an interior vertex, domain_error outside (t0, end].
inline const Face& face_containing(const MinorantDecomposition& dec, double u) {
  if (!(u > dec.vertex_times.front()) || !(u <= dec.vertex_times.back()))
    throw std::domain_error("face_containing: u outside the open time interval");
  for (std::size_t j = 1; j + 1 < dec.vertex_times.size(); ++j)
    if (u == dec.vertex_times[j]) throw vertex_collision(u);
  auto it = std::lower_bound(dec.vertex_times.begin(), dec.vertex_times.end(), u);
  std::size_t j = static_cast<std::size_t>(it - dec.vertex_times.begin());
  // lower_bound lands on the vertex itself when u == d; that face owns u
  if (j == 0) j = 1;
  return dec.faces[j - 1];
}

// Same lookup without the interior-vertex error: a vertex belongs to the
// face ending there, matching the (g, d] convention of the discrete theory.
inline const Face& face_containing_closed(const MinorantDecomposition& dec, double u) {
  if (!(u > dec.vertex_times.front()) || !(u <= dec.vertex_times.back()))
    throw std::domain_error("face_containing: u outside the open time interval");
  auto it = std::lower_bound(dec.vertex_times.begin(), dec.vertex_times.end(), u);
  std::size_t j = static_cast<std::size_t>(it - dec.vertex_times.begin());
  if (j == 0) j = 1;
  return dec.faces[j - 1];
}

// Path minus the chord of the minorant over one face, as a path of length
// d - g starting at time 0. Endpoints vanish exactly (vertices are path
// points); interior values are >= 0 up to rounding.
inline GridPath excursion(const GridPath& path, const Face& face) {
  const std::size_t i0 = path.index_of(face.g);
  const std::size_t i1 = path.index_of(face.d);
  if (i1 <= i0) throw std::invalid_argument("excursion: face not aligned to path grid");
  const std::size_t k = i1 - i0;
  GridPath e;
  e.t0 = 0.0;
  e.dt = path.dt;
  e.values.resize(k + 1);
  const double base = path.values[i0];
  const double rise = path.values[i1] - base;
  for (std::size_t j = 0; j <= k; ++j) {
    const double chord = base + rise * (static_cast<double>(j) / static_cast<double>(k));
    e.values[j] = path.values[i0 + j] - chord;
  }
  return e;
}

// Right derivative D_t of the minorant: nondecreasing step function equal
// to the face slope on [g, d).
struct StepFunction {
  std::vector<double> breaks;  // face left endpoints
  std::vector<double> slopes;
  double end = 0.0;

  double operator()(double t) const {
    if (t >= end) return slopes.back();
    auto it = std::upper_bound(breaks.begin(), breaks.end(), t);
    std::size_t j = static_cast<std::size_t>(it - breaks.begin());
    if (j == 0) return slopes.front();
    return slopes[j - 1];
  }
};

inline StepFunction right_derivative(const MinorantDecomposition& dec) {
  StepFunction d;
  d.breaks.reserve(dec.faces.size());
  d.slopes.reserve(dec.faces.size());
  for (const Face& f : dec.faces) {
    d.breaks.push_back(f.g);
    d.slopes.push_back(f.slope);
  }
  d.end = dec.end();
  return d;
}

// I_x = inf{t >= 0 : D_t > x}, measured from t0; duration when no slope
// exceeds x. Nondecreasing and right-continuous in x.
inline double slope_passage(const MinorantDecomposition& dec, double x) {
  for (const Face& f : dec.faces)
    if (f.slope > x) return f.g - dec.t0;
  return dec.duration();
}

inline std::vector<double> ranked_lengths(const MinorantDecomposition& dec) {
  std::vector<double> lengths;
  lengths.reserve(dec.faces.size());
  for (const Face& f : dec.faces) lengths.push_back(f.length);
  std::sort(lengths.begin(), lengths.end(), std::greater<double>());
  return lengths;
}

struct PathMin {
  double time = 0.0;
  double value = 0.0;
  std::size_t index = 0;
};

// Grid point of minimal value; ties broken to the last minimizing index
// (the location of the last minimum).
inline PathMin argmin(const GridPath& path) {
  PathMin m;
  m.index = 0;
  m.value = path.values[0];
  for (std::size_t k = 1; k < path.values.size(); ++k) {
    if (path.values[k] <= m.value) {
      m.value = path.values[k];
      m.index = k;
    }
  }
  m.time = path.time(m.index);
  return m;
}

}  // namespace levy

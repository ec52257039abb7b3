#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "levy/grid_path.hpp"
#include "levy/minorant.hpp"
#include "levy/rng.hpp"

namespace levy {

// Vervaat transform: cyclic shift of the increments so the path restarts
// at its last minimum, vertically shifted to start at 0. For bridges
// (equal endpoint values) this is the classical excursion construction and
// the output vanishes at both ends.
inline GridPath vervaat(const GridPath& path) {
  path.validate();
  const std::size_t n = path.n_steps();
  const PathMin m = argmin(path);
  const std::size_t k = m.index;
  GridPath out;
  out.t0 = 0.0;
  out.dt = path.dt;
  out.values.resize(n + 1);
  for (std::size_t j = 0; j + k <= n; ++j) out.values[j] = path.values[k + j] - m.value;
  const double wrap = path.values[n] - m.value;
  for (std::size_t i = 1; i <= k; ++i)
    out.values[n - k + i] = wrap + (path.values[i] - path.values[0]);
  return out;
}

// Bridge over [s_start, s_end]: the path segment minus its chord,
// vanishing at both ends exactly.
inline GridPath knight_bridge(const GridPath& path, double s_start, double s_end) {
  const std::size_t i0 = path.index_of(s_start);
  const std::size_t i1 = path.index_of(s_end);
  if (i1 <= i0) throw std::invalid_argument("knight_bridge: need s_start < s_end on the grid");
  const std::size_t k = i1 - i0;
  GridPath out;
  out.t0 = 0.0;
  out.dt = path.dt;
  out.values.resize(k + 1);
  const double base = path.values[i0];
  const double rise = path.values[i1] - base;
  for (std::size_t j = 0; j <= k; ++j)
    out.values[j] = path.values[i0 + j] - base - rise * (static_cast<double>(j) / static_cast<double>(k));
  return out;
}

namespace detail {

// Core of the three-point rearrangement at grid indices a <= b <= c.
// Offsets off2/off3 anchor the relocated pieces; the plain transform uses
// path values there, the minorant-aware variant uses minorant values.
// Grouping each piece as anchor + (value - piece base) makes the output
// start at exactly 0 even when a piece degenerates.
inline GridPath rearrange(const GridPath& path, std::size_t a, std::size_t b, std::size_t c,
                          double off2, double off3) {
  const std::size_t n = path.n_steps();
  const std::vector<double>& v = path.values;
  GridPath out;
  out.t0 = path.t0;
  out.dt = path.dt;
  out.values.resize(n + 1);
  const double anchor2 = off2 + (v[a] - v[b]);
  for (std::size_t j = 0; j < c - b; ++j) out.values[j] = v[b + j] - v[b];
  for (std::size_t j = c - b; j <= c - a; ++j)
    out.values[j] = anchor2 + (v[a + j - (c - b)] - v[a]);
  for (std::size_t j = c - a + 1; j < c; ++j) out.values[j] = off3 + (v[j - (c - a)] - v[0]);
  for (std::size_t j = c; j <= n; ++j) out.values[j] = v[j];
  return out;
}

}  // namespace detail

// Four-piece rearrangement phi_{u1,u2,u3}: post-u2 piece first, then the
// (u1,u2) piece, then the pre-u1 piece, unchanged after u3. Terminal value
// is preserved exactly; the grid increments are permuted.
inline GridPath three_point_transform(const GridPath& path, double u1, double u2, double u3) {
  path.validate();
  const std::size_t a = path.index_of(u1);
  const std::size_t b = path.index_of(u2);
  const std::size_t c = path.index_of(u3);
  if (!(a <= b && b <= c)) throw std::invalid_argument("three_point_transform: need u1 <= u2 <= u3");
  if (c == a) throw std::invalid_argument("three_point_transform: u1 == u3");
  const std::vector<double>& v = path.values;
  return detail::rearrange(path, a, b, c, v[c] - v[a], v[c] - v[a]);
}

// Minorant-aware rearrangement psi_{u1,u2,u3}: the relocated pieces are
// anchored at c(u3) - c(u1) instead of path differences, which places the
// jumps the path may make at u1/u3 on the correct side. Coincides with
// three_point_transform whenever path = minorant at u1 and u3.
inline GridPath psi_transform(const GridPath& path, const MinorantDecomposition& dec, double u1,
                              double u2, double u3) {
  path.validate();
  const std::size_t a = path.index_of(u1);
  const std::size_t b = path.index_of(u2);
  const std::size_t c = path.index_of(u3);
  if (!(a <= b && b <= c)) throw std::invalid_argument("psi_transform: need u1 <= u2 <= u3");
  if (c == a) throw std::invalid_argument("psi_transform: u1 == u3");
  double c1 = 0.0, c3 = 0.0;
  bool found1 = false, found3 = false;
  for (std::size_t j = 0; j < dec.vertex_times.size(); ++j) {
    if (dec.vertex_times[j] == u1 || std::abs(dec.vertex_times[j] - u1) < 1e-9 * path.dt) {
      c1 = dec.vertex_values[j];
      found1 = true;
    }
    if (dec.vertex_times[j] == u3 || std::abs(dec.vertex_times[j] - u3) < 1e-9 * path.dt) {
      c3 = dec.vertex_values[j];
      found3 = true;
    }
  }
  if (!found1 || !found3) throw std::domain_error("psi_transform: u1 and u3 must be vertices");
  const double minorant_rise = c3 - c1;
  return detail::rearrange(path, a, b, c, minorant_rise, minorant_rise);
}

// Result of the invariant transformation: the discovered face (g, d), the
// transformed path X^u (same grid, same terminal value), and the face
// length d - g, which is uniform when u is.
struct TransformResult {
  Face face;
  GridPath transformed;
  double uniform_length = 0.0;
};

// Eq.-style invariant transformation at an independent point u: locate the
// face (g, d] straddling u, snap u up to the grid, and rearrange at
// (g, u, d) with minorant anchoring. u must not hit a vertex.
inline TransformResult invariant_transform(const GridPath& path, double u) {
  const MinorantDecomposition dec = convex_minorant(path);
  const Face& face = face_containing(dec, u);
  // ceil-snap, the grid analogue of sampling u in a right-closed cell
  const double rel = (u - path.t0) / path.dt;
  std::size_t b = static_cast<std::size_t>(std::ceil(rel - 1e-9));
  if (b == 0) b = 1;
  double ub = path.time(b);
  if (ub > face.d) ub = face.d;
  TransformResult r;
  r.face = face;
  r.uniform_length = face.length;
  r.transformed = psi_transform(path, dec, face.g, ub, face.d);
  return r;
}

struct DiscoveryStep {
  double v = 0.0;  // relative length of the discovered face
  Face face;       // in the coordinates of the residual path it was found in
  GridPath remaining;
};

// Recursive size-biased face discovery: apply the invariant transformation,
// delete the discovered face, close the gap by subtracting the face
// increment from the post-face segment, and repeat on the residual path.
// The extracted relative lengths are i.i.d. uniform on (0, 1).
inline std::vector<DiscoveryStep> recursive_face_discovery(const GridPath& path, std::size_t k,
                                                           RngStream& rng) {
  if (k < 1) throw std::domain_error("recursive_face_discovery: k must be >= 1");
  std::vector<DiscoveryStep> steps;
  GridPath z = path;
  for (std::size_t i = 0; i < k; ++i) {
    if (z.values.size() < 3) break;  // residual too short to split further
    double u;
    TransformResult tr;
    for (;;) {
      u = z.t0 + rng.uniform_open() * z.duration();
      try {
        tr = invariant_transform(z, u);
        break;
      } catch (const vertex_collision&) {
        continue;  // re-draw; measure-zero event
      }
    }
    DiscoveryStep step;
    step.v = tr.face.length / z.duration();
    step.face = tr.face;
    const std::size_t cut = static_cast<std::size_t>(
        std::llround(tr.face.length / z.dt));
    GridPath rest;
    rest.t0 = z.t0;
    rest.dt = z.dt;
    rest.values.assign(tr.transformed.values.begin() + static_cast<std::ptrdiff_t>(cut),
                       tr.transformed.values.end());
    const double shift = rest.values[0];
    for (double& vv : rest.values) vv -= shift;
    step.remaining = rest;
    steps.push_back(step);
    z = std::move(rest);
  }
  return steps;
}

}  // namespace levy

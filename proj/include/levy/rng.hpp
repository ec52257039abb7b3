#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace levy {

// Splittable, platform-independent random stream.
//
// Streams are keyed by (master_seed, stream_id): the pair fully determines
// the output sequence, and distinct stream_ids give statistically
// independent streams. Replicate loops hand one stream per replicate so
// results do not depend on scheduling order.
//
// Engine: xoshiro256++ seeded through splitmix64. All derived samplers
// (normal, exponential, gamma, cauchy, stable) are implemented here rather
// than via <random> distributions, whose sequences are not pinned by the
// standard.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_id)
      : master_seed_(master_seed), stream_id_(stream_id) {
    std::uint64_t x = master_seed ^ (0x9E3779B97F4A7C15ULL * (stream_id + 1));
    for (auto& s : state_) s = splitmix64(x);
    // all-zero state would lock the engine at zero
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  std::uint64_t master_seed() const { return master_seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64() {
    std::uint64_t* s = state_;
    const std::uint64_t result = rotl(s[0] + s[3], 23) + s[0];
    const std::uint64_t t = s[1] << 17;
    s[2] ^= s[0];
    s[3] ^= s[1];
    s[1] ^= s[2];
    s[0] ^= s[3];
    s[2] ^= t;
    s[3] = rotl(s[3], 45);
    return result;
  }

  // uniform on [0, 1)
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform on (0, 1)
  double uniform_open() {
    double u;
    do {
      u = uniform01();
    } while (u == 0.0);
    return u;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  // standard normal, Marsaglia polar method with one-value cache
  double normal() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform01() - 1.0;
      v = 2.0 * uniform01() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    cached_ = v * f;
    have_cached_ = true;
    return u * f;
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  double exponential(double rate = 1.0) {
    if (rate <= 0.0) throw std::domain_error("exponential rate must be positive");
    return -std::log(uniform_open()) / rate;
  }

  double cauchy(double scale = 1.0) {
    // inverse-CDF; uniform_open avoids the poles at 0 and 1
    return scale * std::tan(3.14159265358979323846 * (uniform_open() - 0.5));
  }

  // Gamma(shape, rate 1), Marsaglia-Tsang; boosted for shape < 1
  double gamma(double shape) {
    if (shape <= 0.0) throw std::domain_error("gamma shape must be positive");
    if (shape < 1.0) {
      const double g = gamma(shape + 1.0);
      return g * std::pow(uniform_open(), 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform_open();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  // Standard alpha-stable in the S1 parameterization (unit scale),
  // Chambers-Mallows-Stuck. alpha = 1 supported only for beta = 0.
  double stable_standard(double alpha, double beta) {
    const double pi = 3.14159265358979323846;
    const double v = uniform(-pi / 2.0, pi / 2.0);
    if (alpha == 1.0) {
      if (beta != 0.0)
        throw std::domain_error("stable alpha=1 with beta!=0 is not in the catalog");
      return std::tan(v);
    }
    const double w = exponential(1.0);
    const double bt = beta * std::tan(pi * alpha / 2.0);
    const double b0 = std::atan(bt) / alpha;
    const double d0 = std::pow(1.0 + bt * bt, 1.0 / (2.0 * alpha));
    return d0 * std::sin(alpha * (v + b0)) / std::pow(std::cos(v), 1.0 / alpha) *
           std::pow(std::cos(v - alpha * (v + b0)) / w, (1.0 - alpha) / alpha);
  }

 private:
  static std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t master_seed_;
  std::uint64_t stream_id_;
  std::uint64_t state_[4];
  bool have_cached_ = false;
  double cached_ = 0.0;
};

// FNV-1a, used to derive per-check seeds from (master seed, check name)
inline std::uint64_t fnv1a(const char* s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (; *s; ++s) {
    h ^= static_cast<unsigned char>(*s);
    h *= 0x100000001B3ULL;
  }
  return h;
}

}  // namespace levy

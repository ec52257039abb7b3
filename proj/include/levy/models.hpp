#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "levy/grid_path.hpp"
#include "levy/rng.hpp"
#include "levy/special.hpp"

namespace levy {

// Requested marginal CDF has no implemented closed/numeric form.
struct unsupported_cdf : std::runtime_error {
  explicit unsupported_cdf(const std::string& what) : std::runtime_error(what) {}
};

enum class Family { brownian_drift, cauchy, stable, gamma_subordinator };

// Parametric descriptor of a Levy family satisfying hypothesis (CD):
// every member has atomless marginals (none is compound Poisson with drift).
// Immutable after construction and safe to share across threads.
class LevyModel {
 public:
  static LevyModel brownian(double sigma, double drift) {
    if (!(sigma > 0.0)) throw std::invalid_argument("brownian: sigma must be > 0");
    if (!std::isfinite(drift)) throw std::invalid_argument("brownian: drift must be finite");
    LevyModel m(Family::brownian_drift);
    m.sigma_ = sigma;
    m.drift_ = drift;
    return m;
  }

  static LevyModel cauchy(double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("cauchy: scale must be > 0");
    LevyModel m(Family::cauchy);
    m.scale_ = scale;
    return m;
  }

  static LevyModel stable(double alpha, double beta, double scale) {
    if (!(alpha > 0.0 && alpha <= 2.0)) throw std::invalid_argument("stable: alpha must be in (0,2]");
    if (!(beta >= -1.0 && beta <= 1.0)) throw std::invalid_argument("stable: beta must be in [-1,1]");
    if (!(scale > 0.0)) throw std::invalid_argument("stable: scale must be > 0");
    if (alpha == 1.0 && beta != 0.0)
      throw std::invalid_argument("stable: alpha=1 requires beta=0 (symmetric Cauchy)");
    LevyModel m(Family::stable);
    m.alpha_ = alpha;
    m.beta_ = beta;
    m.scale_ = scale;
    return m;
  }

  // normalized so that E e^{-q T_t} = (1+q)^{-t}, i.e. Gamma(shape t, rate 1)
  static LevyModel gamma_subordinator() { return LevyModel(Family::gamma_subordinator); }

  Family family() const { return family_; }
  double sigma() const { return sigma_; }
  double drift() const { return drift_; }
  double scale() const { return scale_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  std::string name() const {
    switch (family_) {
      case Family::brownian_drift: return "brownian";
      case Family::cauchy: return "cauchy";
      case Family::stable: return "stable";
      case Family::gamma_subordinator: return "gamma";
    }
    return "?";
  }

  // l = lim X_t / t where defined; stored explicitly because the
  // infinite-horizon construction needs it exactly, not estimated.
  std::optional<double> long_run_slope() const {
    switch (family_) {
      case Family::brownian_drift:
        return drift_;
      case Family::gamma_subordinator:
        return std::numeric_limits<double>::infinity();
      case Family::cauchy:
        return std::nullopt;
      case Family::stable:
        return alpha_ > 1.0 ? std::optional<double>(0.0) : std::nullopt;
    }
    return std::nullopt;
  }

  // One draw distributed as X_dt.
  double increment_sample(double dt, RngStream& rng) const {
    if (!(dt > 0.0)) throw std::domain_error("increment_sample: dt must be > 0");
    switch (family_) {
      case Family::brownian_drift:
        return drift_ * dt + sigma_ * std::sqrt(dt) * rng.normal();
      case Family::cauchy:
        // 1-selfsimilar: X_dt =d dt * X_1
        return dt * rng.cauchy(scale_);
      case Family::stable:
        return std::pow(dt, 1.0 / alpha_) * scale_ * rng.stable_standard(alpha_, beta_);
      case Family::gamma_subordinator:
        return rng.gamma(dt);
    }
    throw std::logic_error("unreachable");
  }

  bool has_cdf() const {
    if (family_ != Family::stable) return true;
    return alpha_ == 2.0 || alpha_ == 1.0 || (alpha_ == 0.5 && beta_ == 1.0);
  }

  // P(X_t <= x)
  double marginal_cdf(double t, double x) const {
    if (!(t > 0.0)) throw std::domain_error("marginal_cdf: t must be > 0");
    if (std::isnan(x)) throw std::domain_error("marginal_cdf: x is NaN");
    if (x == std::numeric_limits<double>::infinity()) return 1.0;
    if (x == -std::numeric_limits<double>::infinity()) return 0.0;
    switch (family_) {
      case Family::brownian_drift:
        return norm_cdf((x - drift_ * t) / (sigma_ * std::sqrt(t)));
      case Family::cauchy:
        return 0.5 + std::atan(x / (scale_ * t)) / kPi;
      case Family::stable: {
        if (alpha_ == 2.0) {
          // S(2, ., c) = N(0, 2 c^2), so X_t = N(0, 2 c^2 t)
          return norm_cdf(x / (scale_ * std::sqrt(2.0 * t)));
        }
        if (alpha_ == 1.0) return 0.5 + std::atan(x / (scale_ * t)) / kPi;
        if (alpha_ == 0.5 && beta_ == 1.0) {
          // X_t = t^2 S(1/2,1,c) and S(1/2,1,c) is Levy with scale c
          return levy_cdf(scale_ * t * t, x);
        }
        throw unsupported_cdf("stable: no CDF for alpha=" + std::to_string(alpha_) +
                              ", beta=" + std::to_string(beta_));
      }
      case Family::gamma_subordinator:
        return gamma_cdf(t, x);
    }
    throw std::logic_error("unreachable");
  }

  // Random walk skeleton: V_0 = 0, V_k = V_{k-1} + X-increment over horizon/n_steps.
  GridPath path_sample(double horizon, std::size_t n_steps, RngStream& rng) const {
    if (!(horizon > 0.0)) throw std::domain_error("path_sample: horizon must be > 0");
    if (n_steps < 1) throw std::domain_error("path_sample: n_steps must be >= 1");
    GridPath p;
    p.t0 = 0.0;
    p.dt = horizon / static_cast<double>(n_steps);
    p.values.resize(n_steps + 1);
    p.values[0] = 0.0;
    for (std::size_t k = 1; k <= n_steps; ++k) {
      const double v = p.values[k - 1] + increment_sample(p.dt, rng);
      if (!std::isfinite(v))
        throw std::runtime_error("path_sample: non-finite value at step " + std::to_string(k));
      p.values[k] = v;
    }
    return p;
  }

 private:
  explicit LevyModel(Family f) : family_(f) {}

  Family family_;
  double sigma_ = 0.0;
  double drift_ = 0.0;
  double scale_ = 0.0;
  double alpha_ = 0.0;
  double beta_ = 0.0;
};

}  // namespace levy

#ifndef TURING_STRIP_BOUNDS_HPP
#define TURING_STRIP_BOUNDS_HPP

// Explicit upper bounds for |zeta(sigma + it)| on 1/2 <= sigma <= 1 + delta,
// obtained by Phragmen-Lindelof interpolation of (s - 1) zeta(s) between
// line bounds at sigma = 1/2, 1 and 1 + delta.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <variant>

#include "turing/errors.hpp"
#include "turing/zeta.hpp"

namespace turing {

/// Line bounds feeding the interpolation:
///   |zeta(1/2 + it)| <= k1 t^k2 (log t)^k3,   |zeta(1 + it)| <= k4 (log t)^k5,
/// stated in terms of |q0 + s| for the entire function (s - 1) zeta(s).
struct GrowthParams {
  double k1 = 1.0;
  double k2 = 0.0;
  double k3 = 0.0;
  double k4 = 1.0;
  double k5 = 0.0;
  double q0 = 0.0;

  void validate() const {
    const bool ok = k1 > 0.0 && k4 > 0.0 && k2 >= 0.0 && k3 >= 0.0 && k5 >= 0.0 && q0 >= 0.0 &&
                    std::isfinite(k1) && std::isfinite(k2) && std::isfinite(k3) &&
                    std::isfinite(k4) && std::isfinite(k5) && std::isfinite(q0);
    if (!ok) {
      std::ostringstream msg;
      msg << "growth parameters need k1, k4 > 0 and k2, k3, k5, q0 >= 0; got (" << k1 << ", "
          << k2 << ", " << k3 << ", " << k4 << ", " << k5 << ", " << q0 << ")";
      throw DomainError(msg.str());
    }
  }

  friend bool operator==(const GrowthParams&, const GrowthParams&) = default;
};

namespace presets {

/// Exponential-sum bound on the critical line with |zeta(1+it)| <= (3/4) log t.
inline GrowthParams subconvexity() { return {0.732, 1.0 / 6.0, 1.0, 0.75, 1.0, 5.0}; }

/// Approximate-functional-equation bound on the critical line; q0 = 5 as for
/// the sub-convexity set.
inline GrowthParams convexity() {
  return {4.0 / std::pow(2.0 * std::numbers::pi, 0.25), 0.25, 0.0, 0.75, 1.0, 5.0};
}

}  // namespace presets

/// Strip width delta and the height t0 from which the bounds are claimed.
struct StripConfig {
  double delta = 0.1;
  double t0 = 1e5;

  static constexpr double kMinT0 = 1e3;
  static constexpr double kMaxDelta = 2.0;

  void validate() const {
    if (!(delta > 0.0 && delta <= kMaxDelta) || !(t0 >= kMinT0) || !std::isfinite(t0)) {
      std::ostringstream msg;
      msg << "strip config needs delta in (0, " << kMaxDelta << "] and t0 >= " << kMinT0
          << "; got delta = " << delta << ", t0 = " << t0;
      throw DomainError(msg.str());
    }
  }
};

/// Multiplicative corrections turning bounds in |q0 + s| into bounds in t.
struct InflationFactors {
  double a0 = 0.0;
  double a1 = 0.0;
  double alpha1 = 1.0;
  double alpha2 = 1.0;
};

/// Slack on closed sigma-intervals so endpoint identities hold after rounding.
inline constexpr double kSigmaSlack = 1e-12;

/// a0(sigma, q0, t): |log(q0 + sigma + it)| <= (1 + a0) log t for t >= t0.
inline double a0_factor(double sigma, double q0, double t) {
  if (!(t >= StripConfig::kMinT0) || !(q0 >= 0.0) || !(sigma + q0 >= 0.0)) {
    std::ostringstream msg;
    msg << "a0_factor needs t >= " << StripConfig::kMinT0 << " and sigma + q0 >= 0; got sigma = "
        << sigma << ", q0 = " << q0 << ", t = " << t;
    throw DomainError(msg.str());
  }
  const double shift = sigma + q0;
  const double log_t = std::log(t);
  return shift / (2.0 * t * t * log_t) + std::numbers::pi / (2.0 * log_t) +
         std::numbers::pi * shift * shift / (4.0 * t * log_t * log_t);
}

/// a1(sigma, q0, t) = (sigma + q0) / t.
inline double a1_factor(double sigma, double q0, double t) {
  if (!(t > 0.0) || !(q0 >= 0.0)) {
    std::ostringstream msg;
    msg << "a1_factor needs t > 0 and q0 >= 0; got q0 = " << q0 << ", t = " << t;
    throw DomainError(msg.str());
  }
  return (sigma + q0) / t;
}

inline InflationFactors inflation_factors(const GrowthParams& p, const StripConfig& cfg) {
  p.validate();
  cfg.validate();
  InflationFactors f;
  f.a0 = a0_factor(1.0 + cfg.delta, p.q0, cfg.t0);
  f.a1 = a1_factor(1.0 + cfg.delta, p.q0, cfg.t0);
  f.alpha1 = std::pow(1.0 + f.a1, p.k2 + 1.0) * std::pow(1.0 + f.a0, p.k3 + p.k5);
  f.alpha2 = (1.0 + f.a1) * std::pow(1.0 + f.a0, p.k5);
  return f;
}

namespace detail {

inline double clamp_sigma(double sigma, double lo, double hi, const char* what) {
  if (!(sigma >= lo - kSigmaSlack && sigma <= hi + kSigmaSlack)) {
    std::ostringstream msg;
    msg << what << ": sigma = " << sigma << " outside [" << lo << ", " << hi << "]";
    throw DomainError(msg.str());
  }
  return std::min(std::max(sigma, lo), hi);
}

/// Upper value of zeta(1 + delta), accurate to about 1e-9 relative to 1/delta.
inline double zeta_edge_upper(double delta) {
  const double tol = std::min(Tolerance::kLoosest, 1e-9 * (1.0 + 1.0 / delta));
  const auto z = zeta::zeta_real(1.0 + delta, Tolerance(tol));
  return z.value + z.error_bound;
}

inline void require_height(double t, const StripConfig& cfg, const char* what) {
  if (!(t >= cfg.t0) || !std::isfinite(t)) {
    std::ostringstream msg;
    msg << what << ": t = " << t << " below t0 = " << cfg.t0;
    throw DomainError(msg.str());
  }
}

}  // namespace detail

/// Bound on |zeta(sigma + it)| for sigma in [1/2, 1], t >= t0.
inline double bound_left(const GrowthParams& p, const StripConfig& cfg, double sigma, double t) {
  const InflationFactors f = inflation_factors(p, cfg);
  sigma = detail::clamp_sigma(sigma, 0.5, 1.0, "bound_left");
  detail::require_height(t, cfg, "bound_left");
  const double left = 1.0 - sigma;
  const double right = sigma - 0.5;
  const double log_t = std::log(t);
  return f.alpha1 * std::pow(p.k1, 2.0 * left) * std::pow(p.k4, 2.0 * right) *
         std::pow(t, 2.0 * p.k2 * left) * std::pow(log_t, 2.0 * (p.k3 * left + p.k5 * right));
}

/// Bound on |zeta(sigma + it)| for sigma in [1, 1 + delta], t >= t0.
inline double bound_right(const GrowthParams& p, const StripConfig& cfg, double sigma, double t) {
  const InflationFactors f = inflation_factors(p, cfg);
  sigma = detail::clamp_sigma(sigma, 1.0, 1.0 + cfg.delta, "bound_right");
  detail::require_height(t, cfg, "bound_right");
  const double zeta_edge = detail::zeta_edge_upper(cfg.delta);
  const double w_line = (1.0 + cfg.delta - sigma) / cfg.delta;
  const double w_edge = (sigma - 1.0) / cfg.delta;
  return f.alpha2 * std::pow(p.k4, w_line) * std::pow(zeta_edge, w_edge) *
         std::pow(std::log(t), p.k5 * w_line);
}

/// Which hypothesis of the uniform bound failed at the requested height.
struct ConditionViolation {
  enum class Condition {
    /// t^k2 (log t)^(k3 - k5) >= k4 / k1
    GrowthRatio,
    /// t >= exp{(zeta(1 + delta) / k4)^(1 / k5)}
    ZetaThreshold,
    /// t >= max{1.16, exp[4 zeta(1 + delta) / 3]}
    CorollaryThreshold,
  };
  Condition condition;
  double required = 0.0;
  double actual = 0.0;

  std::string describe() const {
    std::ostringstream msg;
    switch (condition) {
      case Condition::GrowthRatio:
        msg << "t^k2 (log t)^(k3-k5) = " << actual << " < k4/k1 = " << required;
        break;
      case Condition::ZetaThreshold:
        msg << "t = " << actual << " < exp{(zeta(1+delta)/k4)^(1/k5)} = " << required;
        break;
      case Condition::CorollaryThreshold:
        msg << "t = " << actual << " < max{1.16, exp[4 zeta(1+delta)/3]} = " << required;
        break;
    }
    return msg.str();
  }
};

using BoundOutcome = std::variant<double, ConditionViolation>;

/// exp{(zeta(1+delta)/k4)^(1/k5)}, with the k5 -> 0 limit.
inline double zeta_threshold(const GrowthParams& p, double delta) {
  const double ratio = detail::zeta_edge_upper(delta) / p.k4;
  if (p.k5 == 0.0) {
    if (ratio < 1.0) return 1.0;
    if (ratio == 1.0) return std::numbers::e;
    return std::numeric_limits<double>::infinity();
  }
  return std::exp(std::pow(ratio, 1.0 / p.k5));
}

/// Bound valid across the whole strip [1/2, 1 + delta] when both regional
/// bounds decrease in sigma at height t.
inline BoundOutcome uniform_bound(const GrowthParams& p, const StripConfig& cfg, double sigma,
                                  double t) {
  const InflationFactors f = inflation_factors(p, cfg);
  detail::clamp_sigma(sigma, 0.5, 1.0 + cfg.delta, "uniform_bound");
  detail::require_height(t, cfg, "uniform_bound");
  const double log_t = std::log(t);
  const double growth = std::pow(t, p.k2) * std::pow(log_t, p.k3 - p.k5);
  const double ratio = p.k4 / p.k1;
  if (growth < ratio) {
    return ConditionViolation{ConditionViolation::Condition::GrowthRatio, ratio, growth};
  }
  const double threshold = zeta_threshold(p, cfg.delta);
  if (t < threshold) {
    return ConditionViolation{ConditionViolation::Condition::ZetaThreshold, threshold, t};
  }
  return f.alpha1 * p.k1 * std::pow(t, p.k2) * std::pow(log_t, p.k3);
}

/// The sub-convexity specialization with its explicit height threshold.
inline BoundOutcome corollary_bound(double delta, double t0, double t) {
  if (!(delta > 0.0)) {
    throw DomainError("corollary_bound: delta must be positive");
  }
  const double threshold =
      std::max(1.16, std::exp(4.0 * detail::zeta_edge_upper(delta) / 3.0));
  if (!(t >= threshold)) {
    return ConditionViolation{ConditionViolation::Condition::CorollaryThreshold, threshold, t};
  }
  const StripConfig cfg{delta, t0};
  cfg.validate();
  detail::require_height(t, cfg, "corollary_bound");
  const GrowthParams p = presets::subconvexity();
  const double a1 = a1_factor(1.0 + delta, p.q0, t0);
  const double a0 = a0_factor(1.0 + delta, p.q0, t0);
  return 0.732 * std::pow(1.0 + a1, 7.0 / 6.0) * std::pow(1.0 + a0, 2.0) *
         std::pow(t, 1.0 / 6.0) * std::log(t);
}

}  // namespace turing

#endif  // TURING_STRIP_BOUNDS_HPP

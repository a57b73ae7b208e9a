#ifndef TURING_COEFFICIENTS_HPP
#define TURING_COEFFICIENTS_HPP

// Coefficients (a, b, c) of
//   |int_{t1}^{t2} S(t) dt| <= a + b log log t2 + c log t2.
//
// pi * a splits into terms depending on delta only, terms depending on d
// only, and a constant; optimizer.hpp relies on that split.

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "turing/errors.hpp"
#include "turing/eval_result.hpp"
#include "turing/strip_bounds.hpp"
#include "turing/zeta.hpp"

namespace turing {

inline constexpr double kTheoremT0 = 1e5;
inline constexpr double kDeltaMin = 0.05;
inline constexpr double kDeltaMax = 1.0;
inline constexpr double kDMin = 0.55;
inline constexpr double kDMax = 1.2;
/// Additive constant carried in pi * a.
inline constexpr double kPiASlack = 3e-4;
/// Default absolute tolerance for each engine call made by coeff_a.
inline constexpr double kCoefficientTolerance = 1e-9;

/// Free parameters of the coefficient formulas.
struct Knobs {
  double delta = 0.1;
  double d = 0.75;
  /// Height at which the inflation factors a0, a1 are evaluated.
  double t0 = kTheoremT0;

  void validate() const {
    if (!(delta >= kDeltaMin && delta <= kDeltaMax)) {
      std::ostringstream msg;
      msg << "delta = " << delta << " outside [" << kDeltaMin << ", " << kDeltaMax << "]";
      throw DomainError(msg.str());
    }
    if (!(d >= kDMin && d <= kDMax)) {
      std::ostringstream msg;
      msg << "d = " << d << " outside [" << kDMin << ", " << kDMax << "] (need d > 1/2)";
      throw DomainError(msg.str());
    }
    if (!(t0 >= StripConfig::kMinT0) || !std::isfinite(t0)) {
      std::ostringstream msg;
      msg << "t0 = " << t0 << " below " << StripConfig::kMinT0;
      throw DomainError(msg.str());
    }
  }
};

struct CoefficientTriple {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  Knobs knobs{};
  GrowthParams params{};
  /// Error bound on a inherited from the engine; b and c are closed forms.
  double a_error = 0.0;
};

/// Constant part of the upper bound for Re int log zeta along a horizontal line:
/// I <= A1 + B1 log log t + C1 log t for t >= t0.
inline EvalResult<double> lemma_A1(const GrowthParams& p, double delta, double t0,
                                   Tolerance tol = Tolerance{kCoefficientTolerance}) {
  p.validate();
  if (!(delta > 0.0)) throw DomainError("lemma_A1: delta must be positive");
  if (!(t0 >= StripConfig::kMinT0)) throw DomainError("lemma_A1: t0 must be >= 1000");
  const double edge = 1.0 + delta;
  const double a1 = a1_factor(edge, p.q0, t0);
  const double a0 = a0_factor(edge, p.q0, t0);
  const auto tail = zeta::integral_log_zeta_tail(edge, tol);
  const auto zeta_edge = zeta::zeta_real(edge, tol);

  const double value = tail.value + (p.k2 / 4.0 + 0.5 + delta) * std::log1p(a1) +
                       0.25 * std::log(p.k1) +
                       (p.k3 / 4.0 + p.k5 / 4.0 + p.k5 * delta / 2.0) * std::log1p(a0) +
                       (0.25 + delta / 2.0) * std::log(p.k4) +
                       delta / 2.0 * std::log(zeta_edge.value);
  const double err = tail.error_bound + delta / 2.0 * zeta_edge.error_bound /
                                            (zeta_edge.value - zeta_edge.error_bound);
  return {value, err};
}

/// (B1, C1), both closed forms.
inline std::pair<double, double> lemma_B1_C1(const GrowthParams& p, double delta) {
  return {(p.k3 + p.k5) / 4.0 + delta * p.k5 / 2.0, p.k2 / 4.0};
}

/// Pieces of pi * a = delta_terms + d_terms + constant.
struct PiASplit {
  EvalResult<double> delta_terms;
  EvalResult<double> d_terms;
  double constant = 0.0;
};

/// Everything in pi * a that moves with delta: A1 minus its (1/4) log k1 term.
inline EvalResult<double> pi_a_delta_terms(const GrowthParams& p, double delta, double t0,
                                           Tolerance tol = Tolerance{kCoefficientTolerance}) {
  auto a1 = lemma_A1(p, delta, t0, tol);
  a1.value -= 0.25 * std::log(p.k1);
  return a1;
}

/// Everything in pi * a that moves with d.
inline EvalResult<double> pi_a_d_terms(double d, Tolerance tol = Tolerance{kCoefficientTolerance}) {
  if (!(d > 0.5)) {
    std::ostringstream msg;
    msg << "d = " << d << " must exceed 1/2";
    throw DomainError(msg.str());
  }
  const double pi = std::numbers::pi;
  const double d2 = d * d;
  const double log4 = std::log(4.0);
  const auto log_deriv = zeta::log_deriv_zeta(0.5 + d, tol);
  const auto tail_far = zeta::integral_log_zeta_tail(1.0 + 2.0 * d, tol);
  const auto tail_near = zeta::integral_log_zeta_tail(0.5 + d, tol);
  const auto band_far = zeta::integral_log_zeta_finite(1.0 + 2.0 * d, 1.0 + 4.0 * d, tol);
  const auto band_near = zeta::integral_log_zeta_finite(0.5 + d, 0.5 + 2.0 * d, tol);

  const double value = d2 * log4 * (-log_deriv.value - 0.5 * std::log(2.0 * pi) + 0.25) +
                       d2 / 2.0 * std::log(pi) - 0.5 * tail_far.value + tail_near.value -
                       0.5 * band_far.value + band_near.value;
  const double err = d2 * log4 * log_deriv.error_bound + 0.5 * tail_far.error_bound +
                     tail_near.error_bound + 0.5 * band_far.error_bound + band_near.error_bound;
  return {value, err};
}

inline PiASplit split_pi_a(const GrowthParams& p, const Knobs& k,
                           Tolerance tol = Tolerance{kCoefficientTolerance}) {
  k.validate();
  p.validate();
  return {pi_a_delta_terms(p, k.delta, k.t0, tol), pi_a_d_terms(k.d, tol),
          0.25 * std::log(p.k1) + kPiASlack};
}

inline EvalResult<double> coeff_a(const GrowthParams& p, const Knobs& k,
                                  Tolerance tol = Tolerance{kCoefficientTolerance}) {
  const PiASplit s = split_pi_a(p, k, tol);
  const double pi = std::numbers::pi;
  return {(s.delta_terms.value + s.d_terms.value + s.constant) / pi,
          (s.delta_terms.error_bound + s.d_terms.error_bound) / pi};
}

inline double coeff_b(const GrowthParams& p, double delta) {
  if (!(delta > 0.0)) throw DomainError("coeff_b: delta must be positive");
  return lemma_B1_C1(p, delta).first / std::numbers::pi;
}

inline double coeff_c(const GrowthParams& p, double d) {
  if (!(d > 0.5)) throw DomainError("coeff_c: d must exceed 1/2");
  return (p.k2 / 4.0 + d * d / 2.0 * (std::log(4.0) - 1.0)) / std::numbers::pi;
}

inline CoefficientTriple make_triple(const GrowthParams& p, const Knobs& k,
                                     Tolerance tol = Tolerance{kCoefficientTolerance}) {
  const auto a = coeff_a(p, k, tol);
  return {a.value, coeff_b(p, k.delta), coeff_c(p, k.d), k, p, a.error_bound};
}

/// a + b log log t2 + c log t2 (natural logarithms).
inline double headline_bound(double a, double b, double c, double t2) {
  if (!(t2 > std::numbers::e) || !std::isfinite(t2)) {
    std::ostringstream msg;
    msg << "headline_bound: t2 = " << t2 << " must exceed e";
    throw DomainError(msg.str());
  }
  const double log_t = std::log(t2);
  return a + b * std::log(log_t) + c * log_t;
}

inline double headline_bound(const CoefficientTriple& triple, double t2) {
  return headline_bound(triple.a, triple.b, triple.c, t2);
}

}  // namespace turing

#endif  // TURING_COEFFICIENTS_HPP

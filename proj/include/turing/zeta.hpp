#ifndef TURING_ZETA_HPP
#define TURING_ZETA_HPP

// Riemann zeta-function evaluations with explicit error bounds.
//
// Every routine returns an EvalResult whose error_bound dominates the
// truncation error of the method (Euler-Maclaurin remainder, Dirichlet
// series tail, quadrature remainder) plus a rounding allowance.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <sstream>

#include "turing/bernoulli.hpp"
#include "turing/errors.hpp"
#include "turing/eval_result.hpp"
#include "turing/gauss_legendre.hpp"
#include "turing/mangoldt.hpp"

namespace turing::zeta {

/// Real arguments must satisfy sigma > 1 + kPoleGap.
inline constexpr double kPoleGap = 1e-6;
/// Number of Bernoulli correction terms in Euler-Maclaurin summation.
inline constexpr int kBernoulliTerms = 12;
/// Relative rounding allowance folded into real evaluations.
inline constexpr double kRoundingCushion = 1e-13;
/// Largest main-sum length tried for real arguments.
inline constexpr long kMaxRealTerms = 1L << 12;

inline constexpr double kComplexSigmaMin = 0.4;
inline constexpr double kComplexSigmaMax = 2.2;
inline constexpr double kComplexTMin = 3.0;
inline constexpr double kComplexTMax = 1e6;

/// Above this abscissa tail integrals switch to the Dirichlet series identity.
inline constexpr double kSeriesSwitch = 3.0;

namespace detail {

inline void require_right_of_pole(double sigma, const char* what) {
  if (!(sigma > 1.0 + kPoleGap) || !std::isfinite(sigma)) {
    std::ostringstream msg;
    msg << what << ": sigma must exceed 1 + " << kPoleGap << ", got " << sigma;
    throw DomainError(msg.str());
  }
}

struct RealSum {
  double zeta = 0.0;
  double zeta_error = 0.0;
  double derivative = 0.0;
  double derivative_error = 0.0;
};

/// Euler-Maclaurin for zeta(sigma) and zeta'(sigma), sigma > 1, with `terms`
/// main terms. The derivative remainder uses Cauchy's estimate on the circle
/// |s - sigma| = 1, on which the remainder stays analytic.
inline RealSum euler_maclaurin_real(double sigma, long terms) {
  const auto& coeff = turing::detail::kBernoulliCoefficients;
  const double n_big = static_cast<double>(terms);
  const double log_n = std::log(n_big);

  double sum = 0.0;
  double dsum = 0.0;
  for (long n = terms - 1; n >= 1; --n) {
    const double ln = std::log(static_cast<double>(n));
    const double term = std::exp(-sigma * ln);
    sum += term;
    dsum -= ln * term;
  }

  const double n_pow = std::exp(-sigma * log_n);  // N^{-sigma}
  const double sm1 = sigma - 1.0;
  sum += n_big * n_pow / sm1 + 0.5 * n_pow;
  dsum += -n_big * n_pow * (log_n / sm1 + 1.0 / (sm1 * sm1)) - 0.5 * log_n * n_pow;

  // T_k = c_k * prod_{j=0}^{2k-2}(sigma+j) * N^{-sigma-2k+1}
  double poly = sigma;
  double poly_log_deriv = 1.0 / sigma;
  double n_scale = n_pow / n_big;
  for (int k = 1; k <= kBernoulliTerms; ++k) {
    const double term = coeff[k - 1] * poly * n_scale;
    sum += term;
    dsum += term * (poly_log_deriv - log_n);
    const double j1 = 2.0 * k - 1.0;
    const double j2 = 2.0 * k;
    poly *= (sigma + j1) * (sigma + j2);
    poly_log_deriv += 1.0 / (sigma + j1) + 1.0 / (sigma + j2);
    n_scale /= n_big * n_big;
  }

  const int kk = kBernoulliTerms;
  const double c_next = std::abs(coeff[kk]);
  // poly now equals prod_{j=0}^{2K}(sigma+j).
  const double remainder = c_next * poly * n_scale;

  double circle_poly = 1.0;
  for (int j = 0; j <= 2 * kk; ++j) circle_poly *= sigma + j + 1.0;
  const double circle_remainder = c_next * circle_poly * (sigma + 2.0 * kk + 2.0) /
                                  (sigma + 2.0 * kk) *
                                  std::exp(-(sigma - 1.0 + 2.0 * kk + 1.0) * log_n);

  RealSum out;
  out.zeta = sum;
  out.zeta_error = remainder + kRoundingCushion * std::max(1.0, std::abs(sum));
  out.derivative = dsum;
  out.derivative_error = circle_remainder + kRoundingCushion * std::max(1.0, std::abs(dsum));
  return out;
}

/// Grows the main sum until the truncation remainders sit far below the
/// rounding cushion; the returned errors are then the best available.
inline RealSum best_real(double sigma) {
  for (long terms = 16;; terms *= 2) {
    RealSum r = euler_maclaurin_real(sigma, terms);
    const double zeta_cushion = kRoundingCushion * std::max(1.0, std::abs(r.zeta));
    const double deriv_cushion = kRoundingCushion * std::max(1.0, std::abs(r.derivative));
    const bool settled = r.zeta_error <= 1.001 * zeta_cushion &&
                         r.derivative_error <= 1.001 * deriv_cushion;
    if (settled || terms >= kMaxRealTerms) return r;
  }
}

/// Bound on |d^m/dsigma^m log zeta(sigma)| valid on [sigma, inf).
/// Uses Lambda(n) <= log n and sum g(n) <= int_1^inf g + max g for the
/// unimodal g(x) = (log x)^m x^{-sigma}.
inline double log_zeta_derivative_bound(int m, double sigma) {
  double m_fact = 1.0;
  for (int k = 2; k <= m; ++k) m_fact *= k;
  const double integral = m_fact / std::pow(sigma - 1.0, m + 1);
  const double peak = std::pow(m / (std::numbers::e * sigma), m);
  return integral + peak;
}

/// Composite 8-point Gauss-Legendre integral of log zeta over [lo, hi],
/// 1 < lo < hi < inf. Panel widths grow geometrically away from the pole.
inline EvalResult<double> quadrature_log_zeta(double lo, double hi, double tol) {
  constexpr std::size_t kNodes = 8;
  const auto& rule = turing::detail::gauss_legendre<kNodes>();
  const double err_const = turing::detail::GaussLegendreRule<kNodes>::error_constant();

  for (double ratio = 0.5; ratio >= 0.5 / 64.0; ratio *= 0.5) {
    const double max_width = 2.0 * ratio;
    double total = 0.0;
    double bound = 0.0;
    double left = lo;
    while (left < hi) {
      double width = std::min({ratio * (left - 1.0), max_width, hi - left});
      if (hi - left - width < 1e-12 * hi) width = hi - left;
      const double right = left + width;
      const double mid = 0.5 * (left + right);
      double panel = 0.0;
      double panel_eval_err = 0.0;
      for (std::size_t i = 0; i < kNodes; ++i) {
        const double x = mid + 0.5 * width * rule.nodes[i];
        const RealSum z = best_real(x);
        panel += rule.weights[i] * std::log(z.zeta);
        panel_eval_err += rule.weights[i] * z.zeta_error / (z.zeta - z.zeta_error);
      }
      total += 0.5 * width * panel;
      bound += 0.5 * width * panel_eval_err;
      bound += err_const * std::pow(width, 2.0 * kNodes + 1.0) *
               log_zeta_derivative_bound(2 * kNodes, left);
      left = right;
    }
    bound += kRoundingCushion * std::max(1.0, std::abs(total));
    if (bound <= tol) return {total, bound};
  }
  std::ostringstream msg;
  msg << "quadrature of log zeta on [" << lo << ", " << hi << "]: tolerance " << tol
      << " unreachable";
  throw ToleranceUnreachable(msg.str());
}

inline double series_tail_bound(double x, std::size_t terms) {
  const double n = static_cast<double>(terms);
  return std::exp((1.0 - x) * std::log(n)) / ((x - 1.0) * std::log(n));
}

}  // namespace detail

/// zeta(sigma) for real sigma > 1.
inline EvalResult<double> zeta_real(double sigma, Tolerance tol = Tolerance{}) {
  detail::require_right_of_pole(sigma, "zeta_real");
  const detail::RealSum r = detail::best_real(sigma);
  if (!(r.zeta_error <= tol.absolute())) {
    std::ostringstream msg;
    msg << "zeta_real(" << sigma << "): error bound " << r.zeta_error
        << " exceeds tolerance " << tol.absolute();
    throw ToleranceUnreachable(msg.str());
  }
  return {r.zeta, r.zeta_error};
}

/// zeta(sigma + i t) for sigma in [0.4, 2.2], t in [3, 1e6].
///
/// Main sum of N = ceil(10 + 2|t|) terms with phases t log n reduced in
/// extended precision, plus kBernoulliTerms Euler-Maclaurin corrections.
inline EvalResult<std::complex<double>> zeta_complex(double sigma, double t,
                                                     Tolerance tol = Tolerance{}) {
  if (!(sigma >= kComplexSigmaMin && sigma <= kComplexSigmaMax) ||
      !(t >= kComplexTMin && t <= kComplexTMax)) {
    std::ostringstream msg;
    msg << "zeta_complex: (sigma, t) = (" << sigma << ", " << t << ") outside ["
        << kComplexSigmaMin << ", " << kComplexSigmaMax << "] x [" << kComplexTMin << ", "
        << kComplexTMax << "]";
    throw DomainError(msg.str());
  }
  using Wide = long double;
  const auto& coeff = turing::detail::kBernoulliCoefficients;
  const long terms = static_cast<long>(std::ceil(10.0 + 2.0 * std::abs(t)));
  const Wide two_pi = 2.0L * std::numbers::pi_v<Wide>;
  const Wide wide_t = t;
  constexpr double unit = std::numeric_limits<double>::epsilon();
  constexpr Wide wide_unit = std::numeric_limits<Wide>::epsilon();

  auto power = [&](Wide log_n) {
    // n^{-s} = n^{-sigma} e^{-i t log n}
    const Wide phase = std::fmod(wide_t * log_n, two_pi);
    const Wide mag = std::exp(-static_cast<Wide>(sigma) * log_n);
    return std::complex<Wide>(mag * std::cos(phase), -mag * std::sin(phase));
  };

  std::complex<Wide> sum = 0;
  double rounding = 0.0;
  for (long n = terms - 1; n >= 1; --n) {
    const Wide ln = std::log(static_cast<Wide>(n));
    const std::complex<Wide> term = power(ln);
    sum += term;
    rounding += static_cast<double>(std::exp(-static_cast<Wide>(sigma) * ln)) *
                (4.0 * static_cast<double>(wide_unit) *
                     (1.0 + std::abs(t) * static_cast<double>(ln)) +
                 8.0 * unit);
  }

  const std::complex<Wide> s(sigma, t);
  const Wide n_big = static_cast<Wide>(terms);
  const Wide log_n = std::log(n_big);
  const std::complex<Wide> n_pow = power(log_n);
  sum += n_big * n_pow / (s - static_cast<Wide>(1)) + n_pow / static_cast<Wide>(2);

  std::complex<Wide> poly = s;
  Wide n_scale = 1.0L / n_big;
  for (int k = 1; k <= kBernoulliTerms; ++k) {
    sum += static_cast<Wide>(coeff[k - 1]) * poly * n_pow * n_scale;
    poly *= (s + static_cast<Wide>(2 * k - 1)) * (s + static_cast<Wide>(2 * k));
    n_scale /= n_big * n_big;
  }
  const int kk = kBernoulliTerms;
  const double remainder = std::abs(coeff[kk]) * static_cast<double>(std::abs(poly)) *
                           static_cast<double>(std::abs(s + static_cast<Wide>(2 * kk + 1))) /
                           (sigma + 2.0 * kk + 1.0) *
                           static_cast<double>(std::exp(-static_cast<Wide>(sigma) * log_n) *
                                               n_scale);

  const std::complex<double> value(static_cast<double>(sum.real()),
                                   static_cast<double>(sum.imag()));
  const double bound = remainder + rounding + 4.0 * unit * std::max(1.0, std::abs(value));
  if (!(bound <= tol.absolute())) {
    std::ostringstream msg;
    msg << "zeta_complex(" << sigma << " + " << t << "i): error bound " << bound
        << " exceeds tolerance " << tol.absolute();
    throw ToleranceUnreachable(msg.str());
  }
  return {value, bound};
}

/// zeta'(sigma) / zeta(sigma) for real sigma > 1.
inline EvalResult<double> log_deriv_zeta(double sigma, Tolerance tol = Tolerance{}) {
  detail::require_right_of_pole(sigma, "log_deriv_zeta");
  const detail::RealSum r = detail::best_real(sigma);
  const double ratio = r.derivative / r.zeta;
  // zeta(sigma) > 1, so zeta - error stays positive.
  const double err =
      (r.derivative_error + std::abs(ratio) * r.zeta_error) / (r.zeta - r.zeta_error);
  if (!(err <= tol.absolute())) {
    std::ostringstream msg;
    msg << "log_deriv_zeta(" << sigma << "): error bound " << err << " exceeds tolerance "
        << tol.absolute();
    throw ToleranceUnreachable(msg.str());
  }
  return {ratio, err};
}

/// sum_{2 <= n < terms} Lambda(n) / (n^x log^2 n), the series identity for
/// int_x^inf log zeta, with the elementary tail bound
/// sum_{n >= terms} n^{-x} / log n <= terms^{1-x} / ((x-1) log terms).
inline EvalResult<double> log_zeta_tail_series(double x, std::size_t terms) {
  detail::require_right_of_pole(x, "log_zeta_tail_series");
  if (terms < 3 || terms > kMangoldtLimit) {
    std::ostringstream msg;
    msg << "log_zeta_tail_series: terms must lie in [3, " << kMangoldtLimit << "], got "
        << terms;
    throw DomainError(msg.str());
  }
  const auto& lambda = mangoldt_table();
  double sum = 0.0;
  for (std::size_t n = terms - 1; n >= 2; --n) {
    if (lambda[n] == 0.0) continue;
    const double ln = std::log(static_cast<double>(n));
    sum += lambda[n] * std::exp(-x * ln) / (ln * ln);
  }
  const double bound =
      detail::series_tail_bound(x, terms) + kRoundingCushion * std::max(1.0, sum);
  return {sum, bound};
}

/// int_{sigma0}^inf log zeta(sigma) d sigma for sigma0 > 1.
inline EvalResult<double> integral_log_zeta_tail(double sigma0, Tolerance tol = Tolerance{}) {
  detail::require_right_of_pole(sigma0, "integral_log_zeta_tail");
  const double start = std::max(sigma0, kSeriesSwitch);
  const double series_budget = sigma0 < kSeriesSwitch ? 0.5 * tol.absolute() : tol.absolute();

  EvalResult<double> series;
  bool found = false;
  for (std::size_t terms = 64; terms <= kMangoldtLimit; terms *= 2) {
    if (detail::series_tail_bound(start, terms) + kRoundingCushion <= series_budget) {
      series = log_zeta_tail_series(start, terms);
      found = series.error_bound <= series_budget;
      break;
    }
  }
  if (!found) {
    std::ostringstream msg;
    msg << "integral_log_zeta_tail(" << sigma0 << "): tolerance " << tol.absolute()
        << " unreachable";
    throw ToleranceUnreachable(msg.str());
  }
  if (sigma0 >= kSeriesSwitch) return series;

  const EvalResult<double> body =
      detail::quadrature_log_zeta(sigma0, kSeriesSwitch, tol.absolute() - series.error_bound);
  return {body.value + series.value, body.error_bound + series.error_bound};
}

/// int_{sigma0}^{sigma1} log zeta(sigma) d sigma; exact 0 when sigma0 == sigma1.
inline EvalResult<double> integral_log_zeta_finite(double sigma0, double sigma1,
                                                   Tolerance tol = Tolerance{}) {
  detail::require_right_of_pole(sigma0, "integral_log_zeta_finite");
  if (!std::isfinite(sigma1) || sigma1 < sigma0) {
    std::ostringstream msg;
    msg << "integral_log_zeta_finite: need sigma0 <= sigma1 < inf, got [" << sigma0 << ", "
        << sigma1 << "]";
    throw DomainError(msg.str());
  }
  if (sigma1 == sigma0) return {0.0, 0.0};
  return detail::quadrature_log_zeta(sigma0, sigma1, tol.absolute());
}

}  // namespace turing::zeta

#endif  // TURING_ZETA_HPP

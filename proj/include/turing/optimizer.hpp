#ifndef TURING_OPTIMIZER_HPP
#define TURING_OPTIMIZER_HPP

// Minimization of a + b log log T + c log T over (delta, d).
//
// No term of the objective couples delta and d, so the search runs as two
// independent one-dimensional problems: a coarse grid locates the global
// bracket, then golden-section search refines inside the neighbouring cells.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <future>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>
#include <vector>

#include "turing/coefficients.hpp"
#include "turing/errors.hpp"

namespace turing {

struct SearchOptions {
  std::size_t grid_points = 200;
  double bracket_width = 1e-4;
  Tolerance tol{kCoefficientTolerance};
  /// Height for the inflation factors; unset means "evaluate at T".
  std::optional<double> t0{};
  /// Upper bound on worker threads for grid evaluation (0 = hardware).
  unsigned threads = 0;

  double t0_for(double height) const { return t0.value_or(height); }
};

struct UnivariateResult {
  double argmin = 0.0;
  double value = 0.0;
  std::size_t evaluations = 0;
  double bracket_width = 0.0;
  /// Smallest objective value seen on the coarse grid.
  double grid_best = 0.0;
};

struct OptimizationResult {
  double best_delta = 0.0;
  double best_d = 0.0;
  CoefficientTriple triple{};
  double objective = 0.0;
  std::size_t evaluations = 0;
  double bracket_width = 0.0;
};

namespace detail {

/// Evaluates f at every point, possibly concurrently; results keep input order.
inline std::vector<double> evaluate_all(const std::function<double(double)>& f,
                                        const std::vector<double>& xs, unsigned threads) {
  std::vector<double> out(xs.size());
  unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(xs.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = f(xs[i]);
    return out;
  }
  std::vector<std::future<void>> jobs;
  jobs.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < xs.size(); i += workers) out[i] = f(xs[i]);
    }));
  }
  for (auto& job : jobs) job.get();
  return out;
}

/// Strict total order on (value, x): smaller value first, then smaller x.
inline bool better(double fa, double xa, double fb, double xb) {
  return fa < fb || (fa == fb && xa < xb);
}

}  // namespace detail

/// Golden-section search on [lo, hi] run for a fixed number of steps so the
/// final bracket is no wider than `width`. Returns the best point evaluated.
template <class F>
UnivariateResult golden_section_minimize(F&& f, double lo, double hi, double width) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const std::size_t steps =
      hi - lo <= width
          ? 0
          : static_cast<std::size_t>(std::ceil(std::log(width / (hi - lo)) / std::log(inv_phi)));
  UnivariateResult out;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  out.evaluations = 2;
  out.argmin = x1;
  out.value = f1;
  if (detail::better(f2, x2, out.value, out.argmin)) {
    out.argmin = x2;
    out.value = f2;
  }
  for (std::size_t i = 0; i < steps; ++i) {
    if (detail::better(f1, x1, f2, x2)) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
      if (detail::better(f1, x1, out.value, out.argmin)) {
        out.argmin = x1;
        out.value = f1;
      }
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
      if (detail::better(f2, x2, out.value, out.argmin)) {
        out.argmin = x2;
        out.value = f2;
      }
    }
    ++out.evaluations;
  }
  out.bracket_width = hi - lo;
  return out;
}

/// Coarse grid plus golden-section refinement; a grid minimum on either end
/// of [lo, hi] is reported as OptimizationFailure.
inline UnivariateResult grid_then_golden(const std::function<double(double)>& f, double lo,
                                         double hi, const SearchOptions& opts,
                                         const char* what) {
  const std::size_t n = std::max<std::size_t>(opts.grid_points, 3);
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  const std::vector<double> fs = detail::evaluate_all(f, xs, opts.threads);
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (detail::better(fs[i], xs[i], fs[best], xs[best])) best = i;
  }
  if (best == 0 || best == n - 1) {
    std::ostringstream msg;
    msg << what << ": grid minimum at boundary " << xs[best] << " of [" << lo << ", " << hi
        << "]";
    throw OptimizationFailure(msg.str());
  }
  UnivariateResult refined =
      golden_section_minimize(f, xs[best - 1], xs[best + 1], opts.bracket_width);
  refined.evaluations += n;
  refined.grid_best = fs[best];
  if (detail::better(fs[best], xs[best], refined.value, refined.argmin)) {
    refined.argmin = xs[best];
    refined.value = fs[best];
  }
  return refined;
}

/// delta-dependent share of the objective at height T.
inline double delta_objective(const GrowthParams& p, double delta, double height,
                              const SearchOptions& opts) {
  const double pi_terms = pi_a_delta_terms(p, delta, opts.t0_for(height), opts.tol).value;
  return pi_terms / std::numbers::pi + coeff_b(p, delta) * std::log(std::log(height));
}

/// d-dependent share of the objective at height T.
inline double d_objective(const GrowthParams& p, double d, double height,
                          const SearchOptions& opts) {
  return pi_a_d_terms(d, opts.tol).value / std::numbers::pi + coeff_c(p, d) * std::log(height);
}

namespace detail {

inline void require_height(double height) {
  if (!(height >= kTheoremT0) || !std::isfinite(height)) {
    std::ostringstream msg;
    msg << "height T = " << height << " below " << kTheoremT0;
    throw DomainError(msg.str());
  }
}

}  // namespace detail

inline UnivariateResult optimize_delta(const GrowthParams& p, double height,
                                       const SearchOptions& opts = {}) {
  p.validate();
  detail::require_height(height);
  return grid_then_golden([&](double x) { return delta_objective(p, x, height, opts); },
                          kDeltaMin, kDeltaMax, opts, "optimize_delta");
}

inline UnivariateResult optimize_d(const GrowthParams& p, double height,
                                   const SearchOptions& opts = {}) {
  p.validate();
  detail::require_height(height);
  return grid_then_golden([&](double x) { return d_objective(p, x, height, opts); }, kDMin,
                          kDMax, opts, "optimize_d");
}

inline OptimizationResult optimize_full(const GrowthParams& p, double height,
                                        const SearchOptions& opts = {}) {
  const UnivariateResult by_delta = optimize_delta(p, height, opts);
  const UnivariateResult by_d = optimize_d(p, height, opts);
  OptimizationResult out;
  out.best_delta = by_delta.argmin;
  out.best_d = by_d.argmin;
  out.triple = make_triple(p, Knobs{out.best_delta, out.best_d, opts.t0_for(height)}, opts.tol);
  out.objective = headline_bound(out.triple, height);
  out.evaluations = by_delta.evaluations + by_d.evaluations;
  out.bracket_width = std::max(by_delta.bracket_width, by_d.bracket_width);
  return out;
}

}  // namespace turing

#endif  // TURING_OPTIMIZER_HPP

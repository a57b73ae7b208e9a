#ifndef TURING_TABLE_HPP
#define TURING_TABLE_HPP

// Optimized bounds at a list of heights for two parameter sets, and the
// height at which one set starts to beat the other.

#include <cmath>
#include <future>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "turing/errors.hpp"
#include "turing/optimizer.hpp"
#include "turing/strip_bounds.hpp"

namespace turing {

struct TableRow {
  double T = 0.0;
  /// Previously published bound at this height, when one is on record.
  std::optional<double> thm22_reference{};
  double bound_convexity = 0.0;
  double bound_subconvexity = 0.0;
  double d_star = 0.0;
  double delta_star = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  /// Set when the row could not be computed; numeric fields are then unset.
  std::optional<std::string> error{};

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct ParamsPair {
  GrowthParams subconvexity = presets::subconvexity();
  GrowthParams convexity = presets::convexity();
};

/// Earlier bounds at T = 10^5 .. 10^15, keyed by log10 T.
inline const std::map<int, double>& thm22_reference_values() {
  static const std::map<int, double> values = {
      {5, 2.747},  {6, 2.883},  {7, 3.018},  {8, 3.154},  {9, 3.290},  {10, 3.426},
      {11, 3.562}, {12, 3.698}, {13, 3.834}, {14, 3.969}, {15, 4.105}};
  return values;
}

/// log10 T when T is (to rounding) an integral power of ten.
inline std::optional<int> exact_decade(double T) {
  if (!(T > 0.0)) return std::nullopt;
  const double e = std::round(std::log10(T));
  if (std::abs(T - std::pow(10.0, e)) <= 1e-9 * T) return static_cast<int>(e);
  return std::nullopt;
}

inline std::optional<double> thm22_reference(double T) {
  const auto decade = exact_decade(T);
  if (!decade) return std::nullopt;
  const auto& values = thm22_reference_values();
  const auto it = values.find(*decade);
  if (it == values.end()) return std::nullopt;
  return it->second;
}

inline std::vector<double> canonical_heights() {
  std::vector<double> out;
  for (int e = 5; e <= 15; ++e) out.push_back(std::pow(10.0, e));
  return out;
}

inline TableRow build_row(double T, const ParamsPair& params, const SearchOptions& opts) {
  TableRow row;
  row.T = T;
  row.thm22_reference = thm22_reference(T);
  try {
    SearchOptions inner = opts;
    inner.threads = 1;
    const OptimizationResult sc = optimize_full(params.subconvexity, T, inner);
    const OptimizationResult cv = optimize_full(params.convexity, T, inner);
    row.bound_subconvexity = sc.objective;
    row.bound_convexity = cv.objective;
    row.d_star = sc.best_d;
    row.delta_star = sc.best_delta;
    row.a = sc.triple.a;
    row.b = sc.triple.b;
    row.c = sc.triple.c;
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

/// One row per height, in input order. Rows run concurrently; a failed row
/// carries its error message and does not stop the others.
inline std::vector<TableRow> build_table(std::span<const double> heights, const ParamsPair& params,
                                         const SearchOptions& opts = {}) {
  std::vector<std::future<TableRow>> jobs;
  jobs.reserve(heights.size());
  const bool parallel = opts.threads != 1;
  for (double T : heights) {
    jobs.push_back(std::async(parallel ? std::launch::async : std::launch::deferred,
                              [T, &params, &opts] { return build_row(T, params, opts); }));
  }
  std::vector<TableRow> rows;
  rows.reserve(heights.size());
  for (auto& job : jobs) rows.push_back(job.get());
  return rows;
}

/// Optimized sub-convexity bound minus optimized convexity bound at T.
inline double preset_gap(const ParamsPair& params, double T, const SearchOptions& opts) {
  return optimize_full(params.subconvexity, T, opts).objective -
         optimize_full(params.convexity, T, opts).objective;
}

/// Height where the two optimized bounds cross, by bisection in log T down to
/// a relative bracket width of `relative_width`.
inline double find_crossover(const ParamsPair& params, double T_low, double T_high,
                             const SearchOptions& opts = {}, double relative_width = 1e-3) {
  if (!(T_low >= kTheoremT0) || !(T_high > T_low) || !std::isfinite(T_high)) {
    std::ostringstream msg;
    msg << "find_crossover needs " << kTheoremT0 << " <= T_low < T_high; got [" << T_low << ", "
        << T_high << "]";
    throw DomainError(msg.str());
  }
  double lo = std::log(T_low);
  double hi = std::log(T_high);
  const double g_lo = preset_gap(params, T_low, opts);
  const double g_hi = preset_gap(params, T_high, opts);
  if (!(g_lo * g_hi < 0.0)) {
    std::ostringstream msg;
    msg << "no sign change of SC - C on [" << T_low << ", " << T_high << "]: " << g_lo << ", "
        << g_hi;
    throw NoSignChange(msg.str());
  }
  const bool lo_positive = g_lo > 0.0;
  while (hi - lo > std::log1p(relative_width)) {
    const double mid = 0.5 * (lo + hi);
    const double g = preset_gap(params, std::exp(mid), opts);
    if ((g > 0.0) == lo_positive) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::exp(0.5 * (lo + hi));
}

}  // namespace turing

#endif  // TURING_TABLE_HPP

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"
#include "table1_fixture.hpp"
#include "turing/turing.hpp"

namespace {

using namespace turing;

// Pinned tolerances.
constexpr double kATol = 0.002;
constexpr double kKnobTol = 0.01;
constexpr double kObjectiveTol = 0.005;
constexpr double kHeadlineTol = 0.01;
constexpr double kZeta2Tol = 1e-12;
constexpr double kSeparabilityTol = 1e-9;
constexpr double kCrossLo = 2.5e10;
constexpr double kCrossHi = 3.2e10;

// Runtime limits in seconds.
constexpr double kLimitClosedForm = 1.0;
constexpr double kLimitA = 30.0;
constexpr double kLimitOptimize = 300.0;
constexpr double kLimitCrossover = 60.0;

struct Check {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

// The published coefficients are upper bounds rounded up to 3 decimals.
double round_up3(double v) { return std::ceil(v * 1000.0) / 1000.0; }
double round3(double v) { return std::round(v * 1000.0) / 1000.0; }

double height_of(const fixture::PublishedRow& row) { return std::pow(10.0, row.decade); }

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

template <class F>
double timed(F&& body) {
  const auto start = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void limit(Check& c, double seconds, double allowed) {
  if (seconds > allowed) c.fail(fmt("took %.2f s, limit %.0f s", seconds, allowed));
}

Check ac1() {
  Check c;
  const auto sc = presets::subconvexity();
  int nearest = 0;
  const double secs = timed([&] {
    for (const auto& row : fixture::kTable) {
      const double b = coeff_b(sc, row.delta);
      const double cc = coeff_c(sc, row.d);
      nearest += (round3(b) == row.b) + (round3(cc) == row.c);
      if (round_up3(b) != row.b)
        c.fail(fmt("row 1e%.0f: b = %.6f, printed %.3f", row.decade, b, row.b));
      if (round_up3(cc) != row.c)
        c.fail(fmt("row 1e%.0f: c = %.6f, printed %.3f", row.decade, cc, row.c));
    }
  });
  limit(c, secs, kLimitClosedForm);
  if (c.ok)
    c.detail = fmt("22/22 entries equal upward rounding (nearest rounding matches %.0f), %.3f s",
                   nearest, secs);
  return c;
}

Check ac2() {
  Check c;
  const auto sc = presets::subconvexity();
  double worst = 0.0;
  const double secs = timed([&] {
    for (const auto& row : fixture::kTable) {
      const double T = height_of(row);
      const auto a = coeff_a(sc, Knobs{row.delta, row.d, T}, Tolerance(1e-8));
      const double diff = std::abs(a.value - row.a);
      worst = std::max(worst, diff);
      if (diff > kATol) c.fail(fmt("row 1e%.0f: a = %.6f, printed %.3f", row.decade, a.value, row.a));
    }
  });
  limit(c, secs, kLimitA);
  if (c.ok) c.detail = fmt("11 rows, max |diff| %.5f, %.2f s", worst, secs);
  return c;
}

Check ac3() {
  Check c;
  double worst_knob = 0.0;
  double worst_obj = 0.0;
  const double secs = timed([&] {
    for (const auto& row : fixture::kTable) {
      const double T = height_of(row);
      const auto sc = optimize_full(presets::subconvexity(), T);
      const auto cv = optimize_full(presets::convexity(), T);
      for (const auto* r : {&sc, &cv}) {
        const double dk = std::max(std::abs(r->best_delta - row.delta), std::abs(r->best_d - row.d));
        worst_knob = std::max(worst_knob, dk);
        if (dk > kKnobTol)
          c.fail(fmt("row 1e%.0f: (delta, d) = (%.4f, %.4f)", row.decade, r->best_delta, r->best_d));
      }
      const double ds = std::abs(sc.objective - row.subconvexity);
      const double dc = std::abs(cv.objective - row.convexity);
      worst_obj = std::max({worst_obj, ds, dc});
      if (ds > kObjectiveTol || dc > kObjectiveTol)
        c.fail(fmt("row 1e%.0f: SC %.6f, C %.6f", row.decade, sc.objective, cv.objective));
    }
  });
  limit(c, secs, kLimitOptimize);
  if (c.ok)
    c.detail = fmt("11 rows, max knob diff %.4f, max objective diff %.4f, %.2f s", worst_knob,
                   worst_obj, secs);
  return c;
}

Check ac4() {
  Check c;
  double crossing = 0.0;
  const double secs = timed([&] {
    try {
      crossing = find_crossover(ParamsPair{}, 1e10, 1e11);
    } catch (const Error& e) {
      c.fail(e.what());
    }
  });
  if (c.ok && !(crossing >= kCrossLo && crossing <= kCrossHi))
    c.fail(fmt("T* = %.4e outside [%.2e, %.2e]", crossing, kCrossLo, kCrossHi));
  limit(c, secs, kLimitCrossover);
  if (c.ok) c.detail = fmt("T* = %.4e, %.2f s", crossing, secs);
  return c;
}

Check ac5() {
  Check c;
  const auto& row = fixture::kTable[5];
  const double printed = headline_bound(row.a, row.b, row.c, 1e10);
  const auto triple = make_triple(presets::subconvexity(), Knobs{row.delta, row.d, 1e10});
  const double computed = headline_bound(triple, 1e10);
  if (std::abs(printed - 3.398) > kHeadlineTol) c.fail(fmt("printed triple gives %.6f", printed));
  if (std::abs(computed - 3.398) > kHeadlineTol) c.fail(fmt("computed triple gives %.6f", computed));
  if (c.ok) c.detail = fmt("printed triple %.6f, computed triple %.6f", printed, computed);
  return c;
}

Check ac6() {
  Check c;
  const auto z2 = zeta::zeta_real(2.0, Tolerance(kZeta2Tol));
  const double pi2_6 = std::numbers::pi * std::numbers::pi / 6.0;
  if (std::abs(z2.value - pi2_6) > kZeta2Tol) c.fail(fmt("zeta(2) off by %.3e", z2.value - pi2_6));

  const std::vector<double> lambda = oracle::mangoldt_upto(1'000'000);
  const auto ld = zeta::log_deriv_zeta(2.0, Tolerance(1e-10));
  const auto ld_oracle = oracle::log_deriv_series(2.0, lambda);
  if (std::abs(ld.value - ld_oracle.value) > ld.error_bound + ld_oracle.error)
    c.fail(fmt("zeta'/zeta(2) = %.15f vs oracle %.15f", ld.value, ld_oracle.value));

  const auto tail = zeta::integral_log_zeta_tail(2.0, Tolerance(1e-9));
  const auto tail_series = oracle::log_zeta_tail_series(2.0, lambda);
  const auto tail_quad = oracle::log_zeta_tail_quadrature(2.0);
  if (std::abs(tail.value - tail_series.value) > tail.error_bound + tail_series.error)
    c.fail(fmt("tail(2) = %.15f vs series %.15f", tail.value, tail_series.value));
  if (std::abs(tail.value - tail_quad.value) > tail.error_bound + tail_quad.error)
    c.fail(fmt("tail(2) = %.15f vs quadrature %.15f", tail.value, tail_quad.value));
  if (c.ok)
    c.detail = fmt("zeta(2) diff %.1e, log-derivative diff %.1e, tail diff %.1e",
                   std::abs(z2.value - pi2_6), std::abs(ld.value - ld_oracle.value),
                   std::max(std::abs(tail.value - tail_series.value),
                            std::abs(tail.value - tail_quad.value)));
  return c;
}

Check ac7() {
  Check c;
  const auto sc = presets::subconvexity();
  int stitched = 0;
  for (double delta : {0.1, 0.148, 0.279}) {
    for (double t : {1e5, 1e6}) {
      const StripConfig cfg{delta, 1e5};
      // The invariant is conditional; a pair failing the conditions must say so.
      if (std::holds_alternative<ConditionViolation>(uniform_bound(sc, cfg, 1.0, t))) continue;
      ++stitched;
      std::vector<double> values;
      for (int i = 0; i <= 200; ++i) values.push_back(bound_left(sc, cfg, 0.5 + 0.5 * i / 200.0, t));
      for (int i = 0; i <= 200; ++i)
        values.push_back(bound_right(sc, cfg, 1.0 + delta * i / 200.0, t));
      for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i] > values[i - 1] * (1.0 + 1e-14))
          c.fail(fmt("stitching not monotone at delta %.3f, t %.0e", delta, t));
      }
    }
  }
  if (stitched == 0) c.fail("no (delta, t) pair satisfies the conditions");

  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> delta_dist(kDeltaMin, kDeltaMax);
  std::uniform_real_distribution<double> d_dist(kDMin, kDMax);
  double worst_cross = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double d1 = delta_dist(gen), d2 = delta_dist(gen);
    const double e1 = d_dist(gen), e2 = d_dist(gen);
    const double cross = coeff_a(sc, {d1, e1, 1e5}).value + coeff_a(sc, {d2, e2, 1e5}).value -
                         coeff_a(sc, {d1, e2, 1e5}).value - coeff_a(sc, {d2, e1, 1e5}).value;
    worst_cross = std::max(worst_cross, std::abs(cross));
  }
  if (worst_cross > kSeparabilityTol) c.fail(fmt("separability cross-difference %.3e", worst_cross));

  const cli::VerifyReport report = cli::run_verification(sc, cli::VerifyOptions{});
  if (report.samples != 2500) c.fail(fmt("verify ran %.0f samples", static_cast<double>(report.samples)));
  if (!(report.worst.ratio < 1.0) || !report.violations.empty())
    c.fail(fmt("verify max ratio %.6f with %.0f violations", report.worst.ratio,
               static_cast<double>(report.violations.size())));
  if (c.ok)
    c.detail = fmt("stitching ok on %.0f/6 pairs (rest fail the conditions), cross-difference "
                   "%.1e, verify max ratio %.4f",
                   stitched, worst_cross, report.worst.ratio);
  return c;
}

Check ac8() {
  Check c;
  auto capture = [](const std::vector<std::string>& args, int& code) {
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
  };
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--format", "csv", "table"},
        std::vector<std::string>{"--format", "json", "table"},
        std::vector<std::string>{"verify"}}) {
    int first_code = 0, second_code = 0;
    const std::string first = capture(args, first_code);
    const std::string second = capture(args, second_code);
    if (first_code != 0 || second_code != 0 || first.empty() || first != second)
      c.fail("outputs differ for " + args.back() + " (" + args.front() + ")");
  }
  if (c.ok) c.detail = "table csv, table json and verify byte-identical";
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria = {
      {"AC1 closed-form b and c columns", ac1},
      {"AC2 a column at printed knobs", ac2},
      {"AC3 optimized knobs and objectives", ac3},
      {"AC4 crossover height", ac4},
      {"AC5 headline bound at 1e10", ac5},
      {"AC6 engine oracles", ac6},
      {"AC7 property suite", ac7},
      {"AC8 deterministic output", ac8},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Check c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %s: %s\n", c.ok ? "PASS" : "FAIL", name, c.detail.c_str());
    std::fflush(stdout);
    if (!c.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}

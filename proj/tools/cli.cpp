#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "turing/turing.hpp"

namespace turing::cli {

namespace {

struct CommonFlags {
  std::string preset = "subconvexity";
  std::optional<double> k1, k2, k3, k4, k5, q0;
  std::optional<double> t0;
  std::optional<double> tol;
  std::string format = "text";
  std::string out_path;
};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

GrowthParams resolve_params(const CommonFlags& flags) {
  if (flags.preset == "subconvexity") return presets::subconvexity();
  if (flags.preset == "convexity") return presets::convexity();
  if (!(flags.k1 && flags.k2 && flags.k3 && flags.k4 && flags.k5 && flags.q0)) {
    throw DomainError("preset custom requires --k1 --k2 --k3 --k4 --k5 --q0");
  }
  GrowthParams p{*flags.k1, *flags.k2, *flags.k3, *flags.k4, *flags.k5, *flags.q0};
  p.validate();
  return p;
}

Tolerance resolve_tolerance(const CommonFlags& flags, double fallback) {
  return Tolerance(flags.tol.value_or(fallback));
}

nlohmann::json params_json(const GrowthParams& p) {
  return {{"k1", p.k1}, {"k2", p.k2}, {"k3", p.k3}, {"k4", p.k4}, {"k5", p.k5}, {"q0", p.q0}};
}

/// Writes to --out when given, otherwise to the command's stream.
void deliver(const CommonFlags& flags, const std::string& text, std::ostream& out) {
  if (flags.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(flags.out_path, std::ios::binary);
  if (!file) throw Error("cannot open output file " + flags.out_path);
  file << text;
}

std::string cmd_coeffs(const CommonFlags& flags, double delta, double d,
                       std::optional<double> at_t2) {
  const GrowthParams p = resolve_params(flags);
  const Knobs knobs{delta, d, flags.t0.value_or(kTheoremT0)};
  const Tolerance tol = resolve_tolerance(flags, kCoefficientTolerance);
  const CoefficientTriple triple = make_triple(p, knobs, tol);
  std::optional<double> bound;
  if (at_t2) bound = headline_bound(triple, *at_t2);

  std::ostringstream out;
  if (flags.format == "json") {
    nlohmann::json j = {{"preset", flags.preset}, {"params", params_json(p)},
                        {"delta", delta},         {"d", d},
                        {"t0", knobs.t0},         {"a", triple.a},
                        {"a_error", triple.a_error}, {"b", triple.b},
                        {"c", triple.c}};
    if (bound) {
      j["t2"] = *at_t2;
      j["bound"] = *bound;
    }
    out << j.dump(2) << "\n";
  } else if (flags.format == "csv") {
    out << "preset,delta,d,t0,a,b,c" << (bound ? ",t2,bound" : "") << "\n";
    out << flags.preset << "," << fixed6(delta) << "," << fixed6(d) << "," << sci(knobs.t0)
        << "," << fixed6(triple.a) << "," << fixed6(triple.b) << "," << fixed6(triple.c);
    if (bound) out << "," << sci(*at_t2) << "," << fixed6(*bound);
    out << "\n";
  } else {
    out << "preset: " << flags.preset << "\n";
    out << "delta: " << fixed6(delta) << "  d: " << fixed6(d) << "  t0: " << sci(knobs.t0)
        << "\n";
    out << "a: " << fixed6(triple.a) << "  (error <= " << sci(triple.a_error) << ")\n";
    out << "b: " << fixed6(triple.b) << "\n";
    out << "c: " << fixed6(triple.c) << "\n";
    if (bound) out << "bound at t2 = " << sci(*at_t2) << ": " << fixed6(*bound) << "\n";
  }
  return out.str();
}

SearchOptions search_options(const CommonFlags& flags) {
  SearchOptions opts;
  opts.tol = resolve_tolerance(flags, kCoefficientTolerance);
  opts.t0 = flags.t0;
  return opts;
}

ReportMetadata report_metadata(const SearchOptions& opts, const ParamsPair& pair) {
  ReportMetadata meta;
  meta.subconvexity = pair.subconvexity;
  meta.convexity = pair.convexity;
  meta.t0_policy = opts.t0 ? sci(*opts.t0) : "T";
  meta.tolerance = opts.tol.absolute();
  meta.grid_points = opts.grid_points;
  meta.bracket_width = opts.bracket_width;
  return meta;
}

std::string cmd_optimize(const CommonFlags& flags, double height) {
  const GrowthParams p = resolve_params(flags);
  const SearchOptions opts = search_options(flags);
  const OptimizationResult r = optimize_full(p, height, opts);
  std::ostringstream out;
  if (flags.format == "json") {
    nlohmann::json j = {{"preset", flags.preset},
                        {"params", params_json(p)},
                        {"T", height},
                        {"t0", opts.t0_for(height)},
                        {"delta", r.best_delta},
                        {"d", r.best_d},
                        {"a", r.triple.a},
                        {"b", r.triple.b},
                        {"c", r.triple.c},
                        {"objective", r.objective},
                        {"evaluations", r.evaluations},
                        {"bracket_width", r.bracket_width}};
    out << j.dump(2) << "\n";
  } else if (flags.format == "csv") {
    out << "preset,T,t0,delta,d,a,b,c,objective\n";
    out << flags.preset << "," << sci(height) << "," << sci(opts.t0_for(height)) << ","
        << fixed6(r.best_delta) << "," << fixed6(r.best_d) << "," << fixed6(r.triple.a) << ","
        << fixed6(r.triple.b) << "," << fixed6(r.triple.c) << "," << fixed6(r.objective) << "\n";
  } else {
    out << "preset: " << flags.preset << "  T: " << sci(height)
        << "  t0: " << sci(opts.t0_for(height)) << "\n";
    out << "delta*: " << fixed6(r.best_delta) << "  d*: " << fixed6(r.best_d) << "\n";
    out << "a: " << fixed6(r.triple.a) << "  b: " << fixed6(r.triple.b)
        << "  c: " << fixed6(r.triple.c) << "\n";
    out << "bound: " << fixed6(r.objective) << "  (evaluations " << r.evaluations
        << ", bracket " << sci(r.bracket_width) << ")\n";
  }
  return out.str();
}

std::string text_table(const std::vector<TableRow>& rows) {
  std::ostringstream out;
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-8s %9s %9s %9s %9s %9s %9s %9s %9s\n", "T", "thm22",
                "C", "SC", "d", "delta", "a", "b", "c");
  out << buf;
  for (const auto& row : rows) {
    const std::string height = detail::format_height(row.T);
    if (row.error) {
      out << height << "  failed: " << *row.error << "\n";
      continue;
    }
    const std::string ref = row.thm22_reference ? fixed6(*row.thm22_reference) : "-";
    std::snprintf(buf, sizeof buf, "%-8s %9s %9.6f %9.6f %9.6f %9.6f %9.6f %9.6f %9.6f\n",
                  height.c_str(), ref.c_str(), row.bound_convexity, row.bound_subconvexity,
                  row.d_star, row.delta_star, row.a, row.b, row.c);
    out << buf;
  }
  return out.str();
}

std::string cmd_table(const CommonFlags& flags, const std::vector<double>& heights,
                      bool& any_failed) {
  const SearchOptions opts = search_options(flags);
  const ParamsPair pair;
  for (double T : heights) {
    if (!(T >= kTheoremT0)) throw DomainError("table heights must be >= 1e5, got " + sci(T));
  }
  const std::vector<TableRow> rows = build_table(heights, pair, opts);
  any_failed = false;
  for (const auto& row : rows) any_failed = any_failed || row.error.has_value();
  if (flags.format == "json") return emit_report(rows, ReportFormat::json, report_metadata(opts, pair));
  if (flags.format == "csv") return emit_report(rows, ReportFormat::csv, report_metadata(opts, pair));
  return text_table(rows);
}

std::string cmd_crossover(const CommonFlags& flags, double low, double high) {
  const SearchOptions opts = search_options(flags);
  const ParamsPair pair;
  const double crossing = find_crossover(pair, low, high, opts);
  std::ostringstream out;
  if (flags.format == "json") {
    out << nlohmann::json{{"low", low}, {"high", high}, {"crossover", crossing}}.dump(2) << "\n";
  } else if (flags.format == "csv") {
    out << "low,high,crossover\n" << sci(low) << "," << sci(high) << "," << sci(crossing) << "\n";
  } else {
    out << "sub-convexity overtakes convexity at T* = " << sci(crossing) << "\n";
  }
  return out.str();
}

std::string render_verify(const CommonFlags& flags, const VerifyReport& report) {
  std::ostringstream out;
  const auto& w = report.worst;
  if (flags.format == "json") {
    nlohmann::json j = {{"samples", report.samples},
                        {"max_ratio", w.ratio},
                        {"worst", {{"sigma", w.sigma}, {"t", w.t}, {"zeta_abs", w.zeta_abs},
                                   {"bound", w.bound}}},
                        {"violations", nlohmann::json::array()}};
    for (const auto& v : report.violations) {
      j["violations"].push_back({{"sigma", v.sigma}, {"t", v.t}, {"ratio", v.ratio}});
    }
    out << j.dump(2) << "\n";
  } else if (flags.format == "csv") {
    out << "samples,max_ratio,worst_sigma,worst_t,violations\n";
    out << report.samples << "," << fixed6(w.ratio) << "," << fixed6(w.sigma) << ","
        << fixed6(w.t) << "," << report.violations.size() << "\n";
  } else {
    out << "samples: " << report.samples << "\n";
    out << "max ratio: " << fixed6(w.ratio) << " at sigma = " << fixed6(w.sigma)
        << ", t = " << fixed6(w.t) << "\n";
    out << "violations: " << report.violations.size() << "\n";
    for (const auto& v : report.violations) {
      out << "  sigma = " << fixed6(v.sigma) << ", t = " << fixed6(v.t)
          << ", ratio = " << fixed6(v.ratio) << "\n";
    }
  }
  return out.str();
}

std::vector<double> parse_heights(const std::vector<std::string>& items) {
  std::vector<double> heights;
  for (const auto& item : items) {
    std::stringstream ss(item);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      if (piece.empty()) continue;
      try {
        std::size_t used = 0;
        const double v = std::stod(piece, &used);
        if (used != piece.size()) throw std::invalid_argument(piece);
        heights.push_back(v);
      } catch (const std::logic_error&) {
        throw DomainError("cannot parse height '" + piece + "'");
      }
    }
  }
  return heights;
}

}  // namespace

std::vector<double> sample_heights(std::uint64_t seed, std::size_t count, double lo, double hi) {
  std::mt19937_64 gen(seed);
  std::vector<double> out(count);
  for (auto& t : out) {
    // 53 random bits mapped to [0, 1); avoids library-specific distributions.
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    t = lo + (hi - lo) * u;
  }
  return out;
}

VerifyReport run_verification(const GrowthParams& params, const VerifyOptions& opts) {
  const StripConfig cfg{opts.delta, opts.t_min};
  cfg.validate();
  const double sigma_max = opts.sigma_max > 0.0 ? opts.sigma_max : 1.0 + opts.delta;
  if (opts.sigma_grid == 0 || opts.t_samples == 0) throw DomainError("verify needs samples");
  if (!(opts.sigma_min >= 0.5 && sigma_max <= 1.0 + opts.delta && opts.sigma_min <= sigma_max)) {
    throw DomainError("verify sigma range must lie inside [1/2, 1 + delta]");
  }
  if (!(opts.t_max > opts.t_min)) throw DomainError("verify needs t_max > t_min");

  const std::vector<double> heights =
      sample_heights(opts.seed, opts.t_samples, opts.t_min, opts.t_max);
  const Tolerance tol(opts.zeta_tolerance);
  VerifyReport report;
  bool first = true;
  for (std::size_t i = 0; i < opts.sigma_grid; ++i) {
    const double sigma =
        opts.sigma_grid == 1
            ? opts.sigma_min
            : opts.sigma_min + (sigma_max - opts.sigma_min) * static_cast<double>(i) /
                                   static_cast<double>(opts.sigma_grid - 1);
    for (double t : heights) {
      const auto z = zeta::zeta_complex(sigma, t, tol);
      VerifySample s;
      s.sigma = sigma;
      s.t = t;
      s.zeta_abs = std::abs(z.value);
      s.zeta_error = z.error_bound;
      s.bound = sigma <= 1.0 ? bound_left(params, cfg, sigma, t) : bound_right(params, cfg, sigma, t);
      s.ratio = s.zeta_abs / s.bound;
      ++report.samples;
      if (first || s.ratio > report.worst.ratio) report.worst = s;
      first = false;
      if (s.zeta_abs + s.zeta_error > s.bound) report.violations.push_back(s);
    }
  }
  return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit bounds for the integral of S(t) used in Turing's method",
               "turing-sbound"};
  app.set_config("--config", "", "Read flags from a file of `key = value` lines");
  app.require_subcommand(1);
  app.fallthrough();

  CommonFlags flags;
  app.add_option("--preset", flags.preset, "Growth parameter set")
      ->check(CLI::IsMember({"subconvexity", "convexity", "custom"}));
  app.add_option("--k1", flags.k1, "custom: constant on the critical line");
  app.add_option("--k2", flags.k2, "custom: t exponent on the critical line");
  app.add_option("--k3", flags.k3, "custom: log t exponent on the critical line");
  app.add_option("--k4", flags.k4, "custom: constant on sigma = 1");
  app.add_option("--k5", flags.k5, "custom: log t exponent on sigma = 1");
  app.add_option("--q0", flags.q0, "custom: shift Q0");
  app.add_option("--t0", flags.t0, "Height for the inflation factors");
  app.add_option("--tol", flags.tol, "Absolute tolerance for engine evaluations");
  app.add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--out", flags.out_path, "Write output to this file");

  double delta = 0.0;
  double d = 0.0;
  std::optional<double> at_t2;
  auto* coeffs = app.add_subcommand("coeffs", "Coefficients (a, b, c) for given delta and d");
  coeffs->add_option("--delta", delta, "Strip width delta")->required();
  coeffs->add_option("--d", d, "Parameter d (> 1/2)")->required();
  coeffs->add_option("--at-t2", at_t2, "Also evaluate a + b log log t2 + c log t2");

  double height = 1e10;
  auto* optimize = app.add_subcommand("optimize", "Optimal (delta, d) at height T");
  optimize->add_option("--height,-T", height, "Height T");

  std::vector<std::string> height_items;
  auto* table = app.add_subcommand("table", "Optimized bounds at heights 1e5 .. 1e15");
  table->add_option("--heights", height_items, "Comma-separated heights (default 1e5..1e15)");

  double low = 1e10;
  double high = 1e11;
  auto* crossover = app.add_subcommand("crossover", "Height where sub-convexity overtakes convexity");
  crossover->add_option("--low", low, "Lower end of the bracket");
  crossover->add_option("--high", high, "Upper end of the bracket");

  VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "Check |zeta| against the strip bounds");
  verify->add_option("--sigma-grid", vopts.sigma_grid, "Number of sigma grid points");
  verify->add_option("--t-samples", vopts.t_samples, "Number of sampled heights");
  verify->add_option("--seed", vopts.seed, "Seed for the height sampler");
  verify->add_option("--delta", vopts.delta, "Strip width delta");
  verify->add_option("--sigma-min", vopts.sigma_min, "Smallest sigma");
  verify->add_option("--sigma-max", vopts.sigma_max, "Largest sigma (default 1 + delta)");
  verify->add_option("--t-min", vopts.t_min, "Smallest height (also t0)");
  verify->add_option("--t-max", vopts.t_max, "Largest height");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitFailure;
  }

  try {
    if (coeffs->parsed()) {
      deliver(flags, cmd_coeffs(flags, delta, d, at_t2), out);
    } else if (optimize->parsed()) {
      deliver(flags, cmd_optimize(flags, height), out);
    } else if (table->parsed()) {
      const std::vector<double> heights =
          height_items.empty() ? canonical_heights() : parse_heights(height_items);
      bool any_failed = false;
      deliver(flags, cmd_table(flags, heights, any_failed), out);
      if (any_failed) return kExitFailure;
    } else if (crossover->parsed()) {
      deliver(flags, cmd_crossover(flags, low, high), out);
    } else if (verify->parsed()) {
      if (flags.tol) vopts.zeta_tolerance = *flags.tol;
      if (flags.t0 && *flags.t0 > vopts.t_min) {
        throw DomainError("verify: --t0 must not exceed --t-min");
      }
      const VerifyReport report = run_verification(resolve_params(flags), vopts);
      deliver(flags, render_verify(flags, report), out);
      if (!report.violations.empty()) return kExitViolation;
    }
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const NoSignChange& e) {
    err << "bracketing error: " << e.what() << "\n";
    return kExitBracket;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace turing::cli

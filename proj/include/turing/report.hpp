#ifndef TURING_REPORT_HPP
#define TURING_REPORT_HPP

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "turing/errors.hpp"
#include "turing/strip_bounds.hpp"
#include "turing/table.hpp"
#include "turing/version.hpp"

namespace turing {

enum class ReportFormat { csv, json };

/// Provenance written ahead of the rows.
struct ReportMetadata {
  std::string subconvexity_name = "subconvexity";
  std::string convexity_name = "convexity";
  GrowthParams subconvexity = presets::subconvexity();
  GrowthParams convexity = presets::convexity();
  /// "T" when inflation factors are taken at each row's height, else the number.
  std::string t0_policy = "T";
  double tolerance = kCoefficientTolerance;
  std::size_t grid_points = 200;
  double bracket_width = 1e-4;
  std::string version = kVersion;
};

inline constexpr const char* kCsvHeader = "T,thm22,convexity,subconvexity,d,delta,a,b,c";

namespace detail {

inline std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

/// "1e10" for exact powers of ten, otherwise scientific with 6 decimals.
inline std::string format_height(double T) {
  if (const auto decade = exact_decade(T)) return "1e" + std::to_string(*decade);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", T);
  return buf;
}

inline std::string params_text(const GrowthParams& p) {
  std::ostringstream out;
  out.precision(17);
  out << "(" << p.k1 << ", " << p.k2 << ", " << p.k3 << ", " << p.k4 << ", " << p.k5 << ", "
      << p.q0 << ")";
  return out.str();
}

inline void check_row(const TableRow& row) {
  if (!(row.T > 0.0) || !std::isfinite(row.T)) {
    throw SerializationError("row has non-positive or non-finite height");
  }
  if (row.error) return;
  const double fields[] = {row.bound_convexity, row.bound_subconvexity, row.d_star,
                           row.delta_star,      row.a,                  row.b,
                           row.c};
  for (double v : fields) {
    if (!std::isfinite(v)) throw SerializationError("row at T = " + format_height(row.T) +
                                                    " has a non-finite field");
  }
  if (!(row.bound_convexity > 0.0 && row.bound_subconvexity > 0.0)) {
    throw SerializationError("row at T = " + format_height(row.T) + " has a non-positive bound");
  }
}

inline nlohmann::json params_json(const GrowthParams& p) {
  return {{"k1", p.k1}, {"k2", p.k2}, {"k3", p.k3}, {"k4", p.k4}, {"k5", p.k5}, {"q0", p.q0}};
}

}  // namespace detail

inline nlohmann::json metadata_json(const ReportMetadata& meta) {
  return {{"version", meta.version},
          {"presets",
           {{meta.subconvexity_name, detail::params_json(meta.subconvexity)},
            {meta.convexity_name, detail::params_json(meta.convexity)}}},
          {"q0", {{meta.subconvexity_name, meta.subconvexity.q0},
                  {meta.convexity_name, meta.convexity.q0}}},
          {"t0", meta.t0_policy},
          {"tolerance", meta.tolerance},
          {"grid_points", meta.grid_points},
          {"bracket_width", meta.bracket_width}};
}

inline nlohmann::json row_json(const TableRow& row) {
  nlohmann::json j;
  j["T"] = row.T;
  j["thm22"] = row.thm22_reference ? nlohmann::json(*row.thm22_reference) : nlohmann::json();
  j["convexity"] = row.bound_convexity;
  j["subconvexity"] = row.bound_subconvexity;
  j["d"] = row.d_star;
  j["delta"] = row.delta_star;
  j["a"] = row.a;
  j["b"] = row.b;
  j["c"] = row.c;
  j["error"] = row.error ? nlohmann::json(*row.error) : nlohmann::json();
  return j;
}

inline std::string emit_report(const std::vector<TableRow>& rows, ReportFormat format,
                               const ReportMetadata& meta = {}) {
  for (const auto& row : rows) detail::check_row(row);

  if (format == ReportFormat::json) {
    nlohmann::json doc;
    doc["metadata"] = metadata_json(meta);
    doc["rows"] = nlohmann::json::array();
    for (const auto& row : rows) doc["rows"].push_back(row_json(row));
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "# turing-sbound " << meta.version << "\n";
  out << "# presets: " << meta.subconvexity_name << "="
      << detail::params_text(meta.subconvexity) << " " << meta.convexity_name << "="
      << detail::params_text(meta.convexity) << "\n";
  out << "# q0: " << meta.subconvexity_name << "=" << meta.subconvexity.q0 << " "
      << meta.convexity_name << "=" << meta.convexity.q0 << "\n";
  out << "# t0: " << meta.t0_policy << "\n";
  out << "# tolerance: " << meta.tolerance << " grid_points: " << meta.grid_points
      << " bracket_width: " << meta.bracket_width << "\n";
  out << kCsvHeader << "\n";
  for (const auto& row : rows) {
    if (row.error) {
      out << "# row T=" << detail::format_height(row.T) << " failed: " << *row.error << "\n";
      continue;
    }
    out << detail::format_height(row.T) << ","
        << (row.thm22_reference ? detail::fixed6(*row.thm22_reference) : std::string()) << ","
        << detail::fixed6(row.bound_convexity) << "," << detail::fixed6(row.bound_subconvexity)
        << "," << detail::fixed6(row.d_star) << "," << detail::fixed6(row.delta_star) << ","
        << detail::fixed6(row.a) << "," << detail::fixed6(row.b) << "," << detail::fixed6(row.c)
        << "\n";
  }
  return out.str();
}

/// Rows of a JSON report produced by emit_report.
inline std::vector<TableRow> parse_json_report(const std::string& text) {
  std::vector<TableRow> rows;
  try {
    const auto doc = nlohmann::json::parse(text);
    for (const auto& j : doc.at("rows")) {
      TableRow row;
      row.T = j.at("T").get<double>();
      if (!j.at("thm22").is_null()) row.thm22_reference = j.at("thm22").get<double>();
      row.bound_convexity = j.at("convexity").get<double>();
      row.bound_subconvexity = j.at("subconvexity").get<double>();
      row.d_star = j.at("d").get<double>();
      row.delta_star = j.at("delta").get<double>();
      row.a = j.at("a").get<double>();
      row.b = j.at("b").get<double>();
      row.c = j.at("c").get<double>();
      if (!j.at("error").is_null()) row.error = j.at("error").get<std::string>();
      rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw SerializationError(std::string("malformed report: ") + e.what());
  }
  return rows;
}

}  // namespace turing

#endif  // TURING_REPORT_HPP

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

namespace {

using turing::cli::run;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json invoke_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const Outcome o = invoke(args);
  EXPECT_EQ(o.code, 0) << o.err;
  return nlohmann::json::parse(o.out);
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("turing_cli_" + name);
}

TEST(Cli, CoeffsDefaultsToTheoremHeight) {
  const Outcome o = invoke({"coeffs", "--delta", "0.148", "--d", "0.762"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("a: 1.708667"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("b: 0.182710"), std::string::npos);
  EXPECT_NE(o.out.find("c: 0.048961"), std::string::npos);
}

TEST(Cli, CoeffsAtRowHeight) {
  const auto j = invoke_json({"coeffs", "--delta", "0.148", "--d", "0.762", "--t0", "1e10",
                              "--at-t2", "1e10"});
  EXPECT_NEAR(j.at("a").get<double>(), 1.698, 0.002);
  EXPECT_NEAR(j.at("bound").get<double>(), 3.398, 0.01);
  EXPECT_LE(j.at("a_error").get<double>(), 1e-8);
}

TEST(Cli, CoeffsConvexityClosedFormC) {
  const auto j = invoke_json({"--preset", "convexity", "coeffs", "--delta", "0.2", "--d", "0.8"});
  const double expected = (1.0 / 16.0 + 0.32 * (std::log(4.0) - 1.0)) / 3.14159265358979323846;
  EXPECT_NEAR(j.at("c").get<double>(), expected, 1e-15);
}

TEST(Cli, CoeffsDomainError) {
  const Outcome o = invoke({"coeffs", "--delta", "0.148", "--d", "0.4"});
  EXPECT_EQ(o.code, turing::cli::kExitDomain);
  EXPECT_NE(o.err.find("domain error"), std::string::npos);
}

TEST(Cli, CustomPresetNeedsAllParameters) {
  EXPECT_EQ(invoke({"--preset", "custom", "--k1", "1", "optimize"}).code,
            turing::cli::kExitDomain);
  const auto j = invoke_json({"--preset", "custom", "--k1", "0.732", "--k2", "0.1666666666666667",
                              "--k3", "1", "--k4", "0.75", "--k5", "1", "--q0", "5", "coeffs",
                              "--delta", "0.148", "--d", "0.762"});
  EXPECT_NEAR(j.at("b").get<double>(), 0.182709874669495831, 1e-12);
}

TEST(Cli, OptimizeDefaultHeight) {
  const auto j = invoke_json({"optimize"});
  EXPECT_EQ(j.at("T").get<double>(), 1e10);
  EXPECT_NEAR(j.at("delta").get<double>(), 0.148, 0.01);
  EXPECT_NEAR(j.at("d").get<double>(), 0.762, 0.01);
  EXPECT_NEAR(j.at("objective").get<double>(), 3.398, 0.005);
}

TEST(Cli, TableSingleHeight) {
  const Outcome o = invoke({"--format", "csv", "table", "--heights", "1e8"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("\n1e8,3.154000,"), std::string::npos) << o.out;
}

TEST(Cli, TableJsonHasElevenRows) {
  const auto j = invoke_json({"table"});
  EXPECT_EQ(j.at("rows").size(), 11u);
  EXPECT_EQ(j.at("metadata").at("t0"), "T");
}

TEST(Cli, TableRejectsLowHeights) {
  EXPECT_EQ(invoke({"table", "--heights", "1e4"}).code, turing::cli::kExitDomain);
  EXPECT_EQ(invoke({"table", "--heights", "abc"}).code, turing::cli::kExitDomain);
}

TEST(Cli, CrossoverDefaultBracket) {
  const auto j = invoke_json({"crossover"});
  const double t = j.at("crossover").get<double>();
  EXPECT_GE(t, 2.5e10);
  EXPECT_LE(t, 3.2e10);
  const auto k = invoke_json({"crossover", "--low", "1e10", "--high", "1e11"});
  EXPECT_EQ(k.at("crossover").get<double>(), t);
}

TEST(Cli, CrossoverWithoutSignChange) {
  const Outcome o = invoke({"crossover", "--low", "1e5", "--high", "1e6"});
  EXPECT_EQ(o.code, turing::cli::kExitBracket);
}

TEST(Cli, VerifyDefaultPasses) {
  const auto j = invoke_json({"verify"});
  EXPECT_EQ(j.at("samples").get<int>(), 2500);
  EXPECT_LT(j.at("max_ratio").get<double>(), 1.0);
  EXPECT_TRUE(j.at("violations").empty());
}

TEST(Cli, VerifyReportsViolations) {
  // k1 far too small for the critical line.
  const Outcome o = invoke({"--preset", "custom", "--k1", "0.01", "--k2", "0", "--k3", "0",
                            "--k4", "0.75", "--k5", "1", "--q0", "5", "verify", "--sigma-grid",
                            "3", "--t-samples", "5", "--sigma-max", "0.6"});
  EXPECT_EQ(o.code, turing::cli::kExitViolation) << o.err;
  EXPECT_NE(o.out.find("violations: "), std::string::npos);
}

TEST(Cli, VerifyIsReproducible) {
  const std::vector<std::string> args = {"verify", "--sigma-grid", "5", "--t-samples", "7",
                                         "--seed", "11"};
  const Outcome a = invoke(args);
  const Outcome b = invoke(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const Outcome c = invoke({"verify", "--sigma-grid", "5", "--t-samples", "7", "--seed", "12"});
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, SampleHeightsInRange) {
  const auto h = turing::cli::sample_heights(3, 1000, 10.0, 20.0);
  ASSERT_EQ(h.size(), 1000u);
  for (double t : h) {
    EXPECT_GE(t, 10.0);
    EXPECT_LT(t, 20.0);
  }
  EXPECT_EQ(h, turing::cli::sample_heights(3, 1000, 10.0, 20.0));
}

TEST(Cli, ConfigFileAndOverride) {
  const auto path = temp_file("config.toml");
  {
    std::ofstream cfg(path);
    cfg << "format=\"json\"\n";
  }
  const Outcome o =
      invoke({"--config", path.string(), "coeffs", "--delta", "0.148", "--d", "0.762"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(nlohmann::json::accept(o.out));
  const Outcome p = invoke({"--config", path.string(), "--format", "csv", "coeffs", "--delta",
                            "0.148", "--d", "0.762"});
  ASSERT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(p.out.rfind("preset,delta,d,t0,a,b,c", 0), 0u);
  std::filesystem::remove(path);
}

TEST(Cli, OutWritesFile) {
  const auto path = temp_file("out.csv");
  std::filesystem::remove(path);
  const Outcome o = invoke({"--format", "csv", "--out", path.string(), "table", "--heights",
                            "1e6"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_NE(text.str().find("T,thm22,convexity,subconvexity,d,delta,a,b,c"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, turing::cli::kExitFailure);
  EXPECT_EQ(invoke({"bogus"}).code, turing::cli::kExitFailure);
  EXPECT_EQ(invoke({"coeffs", "--delta", "0.2"}).code, turing::cli::kExitFailure);
  EXPECT_EQ(invoke({"--help"}).code, turing::cli::kExitOk);
  EXPECT_EQ(invoke({"--tol", "0.5", "coeffs", "--delta", "0.2", "--d", "0.8"}).code,
            turing::cli::kExitDomain);
}

}  // namespace

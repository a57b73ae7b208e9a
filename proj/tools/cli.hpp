#ifndef TURING_TOOLS_CLI_HPP
#define TURING_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "turing/strip_bounds.hpp"

namespace turing::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitBracket = 3;
inline constexpr int kExitViolation = 4;

struct VerifyOptions {
  std::size_t sigma_grid = 50;
  std::size_t t_samples = 50;
  std::uint64_t seed = 20240501;
  double delta = 0.148;
  double sigma_min = 0.5;
  /// Non-positive means 1 + delta.
  double sigma_max = -1.0;
  double t_min = 1e3;
  double t_max = 1e4;
  double zeta_tolerance = 1e-8;
};

struct VerifySample {
  double sigma = 0.0;
  double t = 0.0;
  double zeta_abs = 0.0;
  double zeta_error = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
};

struct VerifyReport {
  std::size_t samples = 0;
  VerifySample worst{};
  std::vector<VerifySample> violations;
};

/// |zeta(sigma + it)| against the regional strip bounds on a sigma grid
/// crossed with seeded pseudo-random heights. A sample violates when
/// |zeta| plus its error bound exceeds the bound.
VerifyReport run_verification(const GrowthParams& params, const VerifyOptions& opts);

/// Heights in [lo, hi) drawn from a 64-bit Mersenne twister seeded with `seed`.
std::vector<double> sample_heights(std::uint64_t seed, std::size_t count, double lo, double hi);

/// Entry point shared by the executable and the tests; args exclude argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace turing::cli

#endif  // TURING_TOOLS_CLI_HPP

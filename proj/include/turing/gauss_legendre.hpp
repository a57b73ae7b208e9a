#ifndef TURING_GAUSS_LEGENDRE_HPP
#define TURING_GAUSS_LEGENDRE_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>

namespace turing::detail {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
template <std::size_t N>
struct GaussLegendreRule {
  std::array<double, N> nodes{};
  std::array<double, N> weights{};

  GaussLegendreRule() {
    for (std::size_t i = 0; i < N; ++i) {
      // Chebyshev-like initial guess, then Newton on P_N.
      double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                          (static_cast<double>(N) + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0;
        double p1 = x;
        for (std::size_t k = 2; k <= N; ++k) {
          const double kd = static_cast<double>(k);
          const double p2 = ((2.0 * kd - 1.0) * x * p1 - (kd - 1.0) * p0) / kd;
          p0 = p1;
          p1 = p2;
        }
        dp = static_cast<double>(N) * (x * p1 - p0) / (x * x - 1.0);
        const double step = p1 / dp;
        x -= step;
        if (std::abs(step) < 1e-17) break;
      }
      nodes[i] = x;
      weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }

  /// Constant C with |error| <= C * h^{2N+1} * max|f^{(2N)}| on a panel of width h.
  static double error_constant() {
    double n_fact = 1.0;
    for (std::size_t k = 2; k <= N; ++k) n_fact *= static_cast<double>(k);
    double two_n_fact = n_fact;
    for (std::size_t k = N + 1; k <= 2 * N; ++k) two_n_fact *= static_cast<double>(k);
    const double n4 = n_fact * n_fact * n_fact * n_fact;
    return n4 / ((2.0 * N + 1.0) * two_n_fact * two_n_fact * two_n_fact);
  }
};

template <std::size_t N>
const GaussLegendreRule<N>& gauss_legendre() {
  static const GaussLegendreRule<N> rule;
  return rule;
}

}  // namespace turing::detail

#endif  // TURING_GAUSS_LEGENDRE_HPP

#ifndef TURING_BERNOULLI_HPP
#define TURING_BERNOULLI_HPP

#include <array>
#include <cstddef>

namespace turing::detail {

/// B_{2k} for k = 1..13.
inline constexpr std::array<double, 13> kBernoulliEven = {
    1.0 / 6.0,          -1.0 / 30.0,        1.0 / 42.0,
    -1.0 / 30.0,        5.0 / 66.0,         -691.0 / 2730.0,
    7.0 / 6.0,          -3617.0 / 510.0,    43867.0 / 798.0,
    -174611.0 / 330.0,  854513.0 / 138.0,   -236364091.0 / 2730.0,
    8553103.0 / 6.0};

constexpr std::array<double, 13> make_bernoulli_coefficients() {
  std::array<double, 13> out{};
  double factorial = 1.0;
  for (std::size_t k = 1; k <= out.size(); ++k) {
    factorial *= static_cast<double>(2 * k - 1) * static_cast<double>(2 * k);
    out[k - 1] = kBernoulliEven[k - 1] / factorial;
  }
  return out;
}

/// B_{2k} / (2k)! for k = 1..13; entry k-1.
inline constexpr std::array<double, 13> kBernoulliCoefficients = make_bernoulli_coefficients();

}  // namespace turing::detail

#endif  // TURING_BERNOULLI_HPP

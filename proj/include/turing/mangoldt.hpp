#ifndef TURING_MANGOLDT_HPP
#define TURING_MANGOLDT_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace turing {

/// Largest n (exclusive) covered by the shared von Mangoldt table.
inline constexpr std::size_t kMangoldtLimit = std::size_t{1} << 21;

namespace detail {

inline std::vector<double> build_mangoldt(std::size_t limit) {
  std::vector<std::uint32_t> spf(limit, 0);
  for (std::size_t i = 2; i < limit; ++i) {
    if (spf[i] != 0) continue;
    for (std::size_t j = i; j < limit; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  std::vector<double> lambda(limit, 0.0);
  for (std::size_t n = 2; n < limit; ++n) {
    const std::size_t p = spf[n];
    std::size_t m = n;
    while (m % p == 0) m /= p;
    if (m == 1) lambda[n] = std::log(static_cast<double>(p));
  }
  return lambda;
}

}  // namespace detail

/// Lambda(n) for 0 <= n < kMangoldtLimit; built once, thread-safe.
inline const std::vector<double>& mangoldt_table() {
  static const std::vector<double> table = detail::build_mangoldt(kMangoldtLimit);
  return table;
}

}  // namespace turing

#endif  // TURING_MANGOLDT_HPP

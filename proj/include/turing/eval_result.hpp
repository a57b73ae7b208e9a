#ifndef TURING_EVAL_RESULT_HPP
#define TURING_EVAL_RESULT_HPP

#include <cmath>
#include <sstream>

#include "turing/errors.hpp"

namespace turing {

/// A computed value together with an upper bound on its absolute error.
template <class T>
struct EvalResult {
  T value{};
  double error_bound = 0.0;
};

/// Requested absolute accuracy for an engine evaluation.
class Tolerance {
 public:
  static constexpr double kDefault = 1e-12;
  static constexpr double kLoosest = 1e-3;

  constexpr Tolerance() = default;

  explicit Tolerance(double absolute) : absolute_(absolute) {
    if (!(absolute > 0.0) || !(absolute <= kLoosest)) {
      std::ostringstream msg;
      msg << "tolerance must lie in (0, " << kLoosest << "], got " << absolute;
      throw DomainError(msg.str());
    }
  }

  constexpr double absolute() const { return absolute_; }

  /// Same requirement scaled down by `factor` (used to split a budget).
  Tolerance scaled(double factor) const { return Tolerance(absolute_ * factor); }

 private:
  double absolute_ = kDefault;
};

}  // namespace turing

#endif  // TURING_EVAL_RESULT_HPP

#ifndef TURING_ERRORS_HPP
#define TURING_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace turing {

/// Base of every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain an operation accepts.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The truncation budget cannot deliver the requested accuracy.
class ToleranceUnreachable : public Error {
 public:
  using Error::Error;
};

/// A grid search landed on the boundary of its search interval.
class OptimizationFailure : public Error {
 public:
  using Error::Error;
};

/// A bracketing search was handed an interval without a sign change.
class NoSignChange : public Error {
 public:
  using Error::Error;
};

class SerializationError : public Error {
 public:
  using Error::Error;
};

}  // namespace turing

#endif  // TURING_ERRORS_HPP

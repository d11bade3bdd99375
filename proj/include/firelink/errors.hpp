#pragma once

#include <stdexcept>
#include <string>

namespace firelink {

/// Bad input: out-of-range parameters, malformed files, contract violations.
/// The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Location cannot be served by the satellite (below the horizon).
class UnservableError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A numerical routine failed to converge. The CLI maps this to exit code 3.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace firelink

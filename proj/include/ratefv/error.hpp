#pragma once

#include <stdexcept>
#include <string>

namespace ratefv {

/// Bad input to a public operation (precondition violated, malformed config).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The numerical state became unusable (NaN/Inf, non-convergent iteration).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File system or stream failure.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ratefv

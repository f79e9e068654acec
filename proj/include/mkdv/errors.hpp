#pragma once

#include <stdexcept>
#include <string>

namespace mkdv {

/// Raised when a physical grid is too coarse to represent a state without aliasing.
class AliasingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical procedure cannot continue (non-finite values,
/// detected instability, refusal of a brute-force path that is too large).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent run configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace mkdv

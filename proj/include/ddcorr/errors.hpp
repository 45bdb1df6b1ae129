#pragma once

#include <stdexcept>
#include <string>

namespace ddcorr {

// Input outside the mathematical domain of an operation (negative times,
// unphysical states, regimes where a quantity does not exist).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed sweep configuration: unknown keys or presets, unparsable values,
// conflicting settings.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// File could not be opened, read or written. The message carries the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ddcorr

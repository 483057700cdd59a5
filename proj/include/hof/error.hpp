#ifndef HOF_ERROR_HPP
#define HOF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hof {

// Error hierarchy used across the library. The C API maps each type to a
// status code; C++ callers catch by type.

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
  using Error::Error;
};

// Inconsistent configuration (e.g. magnetic-cell commensurability).
struct ConfigError : Error {
  using Error::Error;
};

// Requested value outside a validity window; message names the violated bound.
struct RangeError : Error {
  using Error::Error;
};

// Caller broke an interface contract (dimension mismatch etc.).
struct ContractError : Error {
  using Error::Error;
};

// Filesystem failure; message carries the path.
struct IoError : Error {
  using Error::Error;
};

}  // namespace hof

#endif

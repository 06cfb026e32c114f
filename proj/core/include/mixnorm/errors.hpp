#pragma once

#include <stdexcept>
#include <string>

namespace mixnorm {

// Parameter outside the mathematical domain of an operation
// (exponent ranges, Morrey admissibility, kernel constraints, ...).
struct admissibility_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Malformed request: unknown keys, missing fields, bad enum values.
struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File system / serialization failure.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mixnorm

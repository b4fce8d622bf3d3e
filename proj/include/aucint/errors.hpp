#pragma once

#include <stdexcept>

namespace aucint {

// Bad files, absent columns, malformed options: anything the caller fed us.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Singular systems, failed factorizations, degenerate variances.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace aucint

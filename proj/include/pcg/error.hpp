#pragma once

#include <stdexcept>

namespace pcg {

// Raised for malformed inputs, guard violations, and zero-probability
// conditioning events.
struct PcgError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pcg

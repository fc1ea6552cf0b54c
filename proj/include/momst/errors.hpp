// Error taxonomy: caller misuse vs. problem-instance trouble.
#pragma once

#include <stdexcept>

namespace momst {

// Bad arguments or an operation applied to an object it does not fit
// (wrong weight dimension, malformed parameter combination, ...).
// The command line maps this to exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The instance itself is unusable: malformed graph file, disconnected
// input, or a guard limit refusing an infeasible computation.
// The command line maps this to exit code 2.
struct InstanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace momst

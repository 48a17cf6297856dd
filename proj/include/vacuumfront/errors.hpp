#pragma once

#include <stdexcept>
#include <string>

namespace vacuumfront {

// Invalid configuration or rejected input data. CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical failure at runtime (integrator abort, lost monotonicity, NaN).
// CLI maps this to exit code 1.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace vacuumfront

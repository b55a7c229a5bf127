#pragma once

#include <stdexcept>
#include <string>

namespace cdq {

// Bad input: wrong dimensions, malformed files, out-of-range parameters.
// The CLI maps these to exit code 2.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct dimension_error : validation_error {
    using validation_error::validation_error;
};

struct resource_error : validation_error {
    using validation_error::validation_error;
};

// A numerical contract was violated (degenerate commutator, no matching
// solution, infeasible step count, ...). CLI exit code 3.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cdq

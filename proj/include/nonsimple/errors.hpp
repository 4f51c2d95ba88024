#pragma once

#include <stdexcept>
#include <string>

namespace nonsimple {

// Exit-code contract of the CLI: invalid input -> 2, resource limit -> 3, I/O -> 4.
struct invalid_input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct resource_limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Consistency failure that indicates a bug, not bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Parameter t with f(t) = 0; scans report these as "degenerate".
struct degenerate_parameter_error : invalid_input_error {
    using invalid_input_error::invalid_input_error;
};

// Height bound below the admissible threshold B0 of a cover case.
struct below_threshold_error : invalid_input_error {
    double log_B0;
    below_threshold_error(const std::string& msg, double b0)
        : invalid_input_error(msg), log_B0(b0) {}
};

} // namespace nonsimple

#pragma once

#include <stdexcept>
#include <string>

namespace pds {

// Base for everything the library throws deliberately.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested order / degree / index exceeds the configured cap.
struct capacity_error : error {
    using error::error;
};

// A stated precondition is violated; the message names the failed condition.
struct domain_error : error {
    using error::error;
};

// Evaluation at a pole (s = 1 for zeta-type functions, nonpositive
// integers for Gamma).
struct pole_error : error {
    using error::error;
};

// A series budget ran out before reaching its tail target.
struct accuracy_error : error {
    double achieved_tail;
    accuracy_error(const std::string& msg, double tail)
        : error(msg), achieved_tail(tail) {}
};

// Malformed literal / sequence spec / config input.
struct parse_error : error {
    using error::error;
};

} // namespace pds

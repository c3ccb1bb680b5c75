#pragma once

#include <stdexcept>
#include <string>

namespace bordism {

// Input failed a documented precondition (bad weight, nonzero constant term, ...).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A request exceeded the ring truncation (half-degree > N, x-degree too small, ...).
struct TruncationError : std::domain_error {
    using std::domain_error::domain_error;
};

// A localized computation ran out of effective precision; carries the degree
// that would be needed to proceed.
struct PrecisionError : std::runtime_error {
    int needed_degree;
    explicit PrecisionError(const std::string& what, int needed)
        : std::runtime_error(what), needed_degree(needed) {}
};

// Configured resource limits exceeded (context too large, ...).
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace bordism

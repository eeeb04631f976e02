#ifndef CCW_ERRORS_HPP
#define CCW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ccw {

/// Thrown when an argument violates an operation's precondition
/// (bad vertex index, non-clique shared set, malformed file, ...).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown by the exact solvers when an instance exceeds the configured size limit.
class LimitExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace ccw

#endif

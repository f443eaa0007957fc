#pragma once

#include <stdexcept>
#include <string>

namespace multdep {

// Bad user input: malformed text, violated preconditions, mismatched fields.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Syntax error with a 0-based position into the offending text.
struct parse_error : input_error {
    parse_error(const std::string& what, std::size_t pos)
        : input_error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
    std::size_t position;
};

// A configured resource limit was hit; carries how far the computation got.
struct budget_error : std::runtime_error {
    budget_error(const std::string& what, long reached_)
        : std::runtime_error(what), reached(reached_) {}
    long reached;
};

// Requested certification could not be achieved within the iteration cap.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A certificate failed to re-verify.  Never expected; aborts the operation.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace multdep

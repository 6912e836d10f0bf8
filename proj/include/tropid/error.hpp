#pragma once

#include <stdexcept>
#include <string>

namespace tropid {

// Malformed textual or JSON input (identity grammar, poset files, assignments).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Structurally invalid argument: mismatched index sets, bad posets, n = 0, ...
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An operation was called outside its precondition, e.g. asking for a
// falsifying witness of an identity that holds.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An internal invariant failed at runtime. Never caught and ignored.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

#define TROPID_ENSURE(cond, msg)                                               \
    do {                                                                       \
        if (!(cond)) throw ::tropid::InternalError(std::string(msg));          \
    } while (0)

} // namespace tropid

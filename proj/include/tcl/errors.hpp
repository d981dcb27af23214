#pragma once

#include <stdexcept>
#include <string>

namespace tcl {

// Caller passed a value outside an operation's domain.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed .3g / .2g input. `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

// A lemma-style precondition (degree bound, divisibility) does not hold.
class PreconditionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A step that must succeed whenever the preconditions hold did not.
// Always an implementation bug; `witness` carries the offending data.
class InvariantViolation : public std::logic_error {
public:
    InvariantViolation(const std::string& what, std::string witness)
        : std::logic_error(what), witness_(std::move(witness)) {}
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

// Instance exceeds the budget of an exact solver.
class SizeLimitError : public std::length_error {
public:
    using std::length_error::length_error;
};

}  // namespace tcl

#pragma once

#include <stdexcept>
#include <string>

namespace genocchi {

// Malformed text handed to a parser.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Well-formed object that violates one of its model's defining conditions.
// `invariant()` names the condition that failed.
class InvariantError : public std::runtime_error {
public:
    InvariantError(std::string invariant, const std::string& detail)
        : std::runtime_error(invariant + ": " + detail), invariant_(std::move(invariant)) {}

    const std::string& invariant() const noexcept { return invariant_; }

private:
    std::string invariant_;
};

// Request refused by a resource bound (enumeration order, pair count order).
class GuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A map or recurrence reached a state its construction rules out. Always a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace genocchi

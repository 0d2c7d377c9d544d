#pragma once

#include <stdexcept>
#include <string>

namespace qgw {

// User-facing precondition violations (CLI exit code 1).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DivisionByZeroError : DomainError {
    DivisionByZeroError() : DomainError("division by zero") {}
};

struct PoleError : DomainError {
    explicit PoleError(const std::string& what) : DomainError(what) {}
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& what, std::size_t pos)
        : std::runtime_error(what + " at position " + std::to_string(pos)), position(pos) {}
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A structural identity that the implementation itself guarantees failed to
// verify (CLI exit code 2).
struct VerificationError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace qgw

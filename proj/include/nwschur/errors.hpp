#pragma once

#include <stdexcept>
#include <string>

namespace nwschur {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (grid or JSON).
struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

struct NotNorthwestError : PreconditionError {
    explicit NotNorthwestError(const std::string& msg) : PreconditionError(msg) {}
};

struct BlowupNotClosedError : PreconditionError {
    explicit BlowupNotClosedError(const std::string& msg) : PreconditionError(msg) {}
};

struct NotSymmetricError : PreconditionError {
    explicit NotSymmetricError(const std::string& msg) : PreconditionError(msg) {}
};

struct NotPolynomialError : PreconditionError {
    explicit NotPolynomialError(const std::string& msg) : PreconditionError(msg) {}
};

struct NonDominantLeadingTermError : PreconditionError {
    explicit NonDominantLeadingTermError(const std::string& msg) : PreconditionError(msg) {}
};

// Internal consistency failure: the computation produced data that
// contradicts an identity the inputs were supposed to guarantee.
struct IntegrityError : Error {
    explicit IntegrityError(const std::string& msg) : Error(msg) {}
};

struct NonExactDivisionError : IntegrityError {
    explicit NonExactDivisionError(const std::string& msg) : IntegrityError(msg) {}
};

} // namespace nwschur

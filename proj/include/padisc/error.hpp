#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace padisc {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An argument outside the mathematical domain of an operation
// (non-prime modulus, zero valuation, nonpositive radius, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A finite-precision p-adic value was asked for digits it does not carry.
class PrecisionError : public Error {
public:
    using Error::Error;
};

// An exhaustive enumeration would exceed its configured cap.
class EnumerationLimitError : public Error {
public:
    using Error::Error;
};

// Two decision procedures that must agree did not.
class InternalError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace padisc

#pragma once

#include <stdexcept>
#include <string>

namespace rmt {

/// Base class for every error raised by the library. The CLI maps these to
/// exit status 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shape mismatch, e.g. a determinant of a non-square matrix.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Request exceeds a configured resource budget.
class ResourceError : public Error {
public:
    using Error::Error;
};

/// Request exceeds stored or computable data (series orders, table bounds).
class RangeError : public Error {
public:
    using Error::Error;
};

/// An asymptotic assembly needs more 1/N terms than were supplied.
class OrderStarvation : public RangeError {
public:
    OrderStarvation(int required, int supplied)
        : RangeError("order starvation: " + std::to_string(required) +
                     " terms of the 1/N series are required, " + std::to_string(supplied) +
                     " were supplied"),
          required_(required) {}

    int required() const noexcept { return required_; }

private:
    int required_;
};

}  // namespace rmt

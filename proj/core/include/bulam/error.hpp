#pragma once

#include <stdexcept>
#include <string>

namespace bulam {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes do not fit together (vector length, non-square input).
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A precondition on the value of an argument failed.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, never bad input.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace bulam

#pragma once

#include <stdexcept>

namespace qexthh {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldError : Error {
    using Error::Error;
};

/// Numeric q in {1, -1}: the only rational roots of unity.
struct RootOfUnityError : FieldError {
    using FieldError::FieldError;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

/// Numeric-mode membership test for {±q^i} exhausted its exponent bound;
/// the caller must treat the scalar as "not classified".
struct InconclusiveError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct NotDegreePreservingError : Error {
    using Error::Error;
};

struct NotAutomorphismError : Error {
    using Error::Error;
};

struct IndexError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

struct DegreeTooLargeError : Error {
    using Error::Error;
};

struct UnclassifiableError : Error {
    using Error::Error;
};

/// Evaluation of a rational function at a numeric q hit a zero denominator,
/// or a twist parameter vanished under specialization.
struct SpecializationError : Error {
    using Error::Error;
};

} // namespace qexthh

#pragma once

#include <stdexcept>
#include <string>

namespace lct {

// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter matrix fails the unit-determinant constraint.
struct DeterminantError : Error {
    using Error::Error;
};

// Operation requires the b (or B) entry of the parameter matrix to be nonzero.
struct ZeroBError : Error {
    using Error::Error;
};

// Signal container violates its invariants (length, finiteness, delta).
struct InvalidSignal : Error {
    using Error::Error;
};

struct LengthMismatch : Error {
    using Error::Error;
};

struct ZeroReference : Error {
    using Error::Error;
};

struct DegenerateParallelogram : Error {
    using Error::Error;
};

struct UnknownSignal : Error {
    using Error::Error;
};

// Signal file could not be parsed or violates the file contract.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace lct

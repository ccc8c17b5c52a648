#pragma once

#include <stdexcept>
#include <string>

namespace twh {

// Base of every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (bad cocycle, bad datum, non-finite group).
struct ValidationError : Error {
    using Error::Error;
};

// A precondition of an operation was not met by the caller.
struct PreconditionError : Error {
    using Error::Error;
};

// A mathematical invariant that must hold failed; indicates a bug or corrupt input tables.
struct InvariantViolation : Error {
    using Error::Error;
};

// A computation could not be completed (e.g. decomposition search exhausted).
struct ComputationError : Error {
    using Error::Error;
};

struct ConductorError : Error {
    using Error::Error;
};

struct DivisibilityError : Error {
    using Error::Error;
};

// Candidate weights do not cover the module.
struct CoverageError : Error {
    using Error::Error;
};

}  // namespace twh

#pragma once

#include <stdexcept>
#include <string>

namespace parq {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape mismatches: non-square matrix where a square one is required, etc.
struct dimension_error : error {
    using error::error;
};

// Malformed or out-of-contract input values (negative multiplicities,
// exponent vectors of the wrong length, labels out of range, ...).
struct validation_error : error {
    using error::error;
};

// An enumeration or state-space guard was exceeded.  Callers may retry with
// a raised guard; the condition is about problem size, not about the input
// being wrong.
struct capacity_error : error {
    using error::error;
};

// A matrix required to be nonsingular is singular.
struct singularity_error : error {
    using error::error;
};

// A mathematical invariant that the library itself guarantees failed to
// hold.  Reaching this is a bug (or a falsified theorem), never user error.
struct invariant_error : error {
    using error::error;
};

} // namespace parq

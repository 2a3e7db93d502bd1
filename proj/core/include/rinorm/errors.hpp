#pragma once

#include <stdexcept>
#include <string>

namespace rinorm {

// Base class for every error raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A function required to be non-increasing is not.
struct NotMonotone : Error {
    using Error::Error;
};

// An argument required to be strictly positive is not.
struct NonPositiveArgument : Error {
    using Error::Error;
};

// Norm specification parameters outside the supported range.
struct InvalidSpec : Error {
    using Error::Error;
};

// Construction parameters outside the supported range.
struct InvalidParameters : Error {
    using Error::Error;
};

// Luxemburg bracket search or bisection did not converge.
struct BisectionFailure : Error {
    using Error::Error;
};

// Operation not defined for the given Young function family.
struct UnsupportedYoungFamily : Error {
    using Error::Error;
};

// A convex combination with no usable denominator.
struct DegenerateCombo : Error {
    using Error::Error;
};

// A function whose support violates the operation's contract.
struct UnsupportedSupport : Error {
    using Error::Error;
};

// A candidate list that leaves some grid node with no interval.
struct EmptyCandidates : Error {
    using Error::Error;
};

// A ratio whose denominator norm vanishes.
struct ZeroNorm : Error {
    using Error::Error;
};

// The norm of the probed tail dropped below the required level, so the
// interval construction cannot continue.
struct NormVanishes : Error {
    using Error::Error;
};

// CLI: preset name not recognised.
struct UnknownPreset : Error {
    using Error::Error;
};

// CLI: malformed or inconsistent configuration payload.
struct ConfigInvalid : Error {
    using Error::Error;
};

// CLI: filesystem read/write failure.
struct IoFailure : Error {
    using Error::Error;
};

}  // namespace rinorm

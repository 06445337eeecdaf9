#pragma once

#include <stdexcept>
#include <string>

namespace rospave {

// Base for every input or contract failure this library raises on purpose.
// The CLI maps any Error to exit code 2; verification mismatches are not
// errors and travel through return values instead.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct NegativeEntry : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

struct ZeroMatrix : Error {
    using Error::Error;
};

struct NonPositiveEpsilon : Error {
    using Error::Error;
};

struct PreconditionViolated : Error {
    using Error::Error;
};

struct InstanceTooLarge : Error {
    using Error::Error;
};

struct DomainTooSmall : Error {
    using Error::Error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

} // namespace rospave

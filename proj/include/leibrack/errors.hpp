#ifndef LEIBRACK_ERRORS_HPP
#define LEIBRACK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace leibrack {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operand sizes disagree with the algebra or with each other.
struct DimensionMismatch : Error {
    using Error::Error;
};

// Exact exponential requested for an operator that is not nilpotent.
struct NotNilpotent : Error {
    NotNilpotent(std::string what, std::size_t max_power_tried)
        : Error(std::move(what)), max_power(max_power_tried) {}
    std::size_t max_power;
};

struct SingularMatrix : Error {
    using Error::Error;
};

// An operation's input failed its documented precondition (non-Lie input,
// non-morphism, non-action, ...).
struct PreconditionFailed : Error {
    using Error::Error;
};

// A value the theory guarantees (e.g. cocycle values in the left center)
// failed to materialize. Always a library bug.
struct InternalInconsistency : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace leibrack

#endif

#pragma once

#include <stdexcept>
#include <string>

namespace l2a {

// Malformed definitions, parse failures, dimension mismatches.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mathematically well-formed requests outside what the tool supports
// (non-constant omega, homotopy operator on exponential coefficients, ...).
struct Unsupported : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition of an operation violated by otherwise valid data.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace l2a

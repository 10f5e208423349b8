#pragma once

#include <stdexcept>
#include <string>

namespace detlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Polynomials (or ideals) built over different variable tables were combined.
struct ContextError : Error {
    using Error::Error;
};

// Operation undefined for the given input: zero divisor, degree of 0, unit ideal...
struct DomainError : Error {
    using Error::Error;
};

// Invalid matrix specification.
struct SpecError : Error {
    using Error::Error;
};

// A resource cap (pairs, basis size, degree, wall time, term count) was hit.
struct ResourceError : Error {
    using Error::Error;
};

// A coefficient denominator vanished modulo the chosen prime.
struct PrimeRetryError : Error {
    using Error::Error;
};

// Bad scenario configuration or CLI input.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace detlab

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace milnor {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed polynomial/corpus text.  `position` is a byte offset into the input.
struct ParseError : Error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// A caller-supplied precondition was violated (point not on the hypersurface,
// inhomogeneous input, duplicate points, ...).
struct PreconditionError : Error {
    using Error::Error;
};

// The reduction-step budget of a standard-basis computation ran out.
struct BudgetExceededError : Error {
    std::uint64_t limit;
    explicit BudgetExceededError(std::uint64_t lim)
        : Error("reduction budget exceeded (" + std::to_string(lim) + " steps)"), limit(lim) {}
};

// A finite Milnor number was required but the singularity is not isolated.
struct NonIsolatedError : Error {
    using Error::Error;
};

// A randomized computation failed to stabilize across independent draws.
struct InstabilityError : Error {
    using Error::Error;
};

// Branch counting hit a germ with a repeated factor (non-reduced curve).
struct NonReducedError : Error {
    using Error::Error;
};

// Branch counting exceeded its recursion depth limit.
struct DepthExceededError : Error {
    using Error::Error;
};

}  // namespace milnor

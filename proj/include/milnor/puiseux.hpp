#pragma once

// Number of branches (local analytic components over C) of a reduced plane
// germ, computed by the Newton-Puiseux recursion.  Algebraic numbers arising
// from edge polynomials are handled by dynamic evaluation: computation runs in
// towers of univariate quotient rings, and when a zero divisor is hit the
// offending modulus is factored and the computation re-runs in both factors,
// summing branch counts over all embeddings.

#include <cstdint>

#include "milnor/local.hpp"
#include "milnor/poly.hpp"

namespace milnor {

// Total branch count of the germ (two variables, vanishing at the origin).
// Non-reduced germs (repeated factors, equivalently infinite Milnor number)
// raise NonReducedError; recursion past `max_depth` raises DepthExceededError.
// The budget is charged by the reducedness check.
std::int64_t branch_count(const Polynomial& germ, Budget& budget, int max_depth = 48);

}  // namespace milnor

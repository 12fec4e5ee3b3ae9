#pragma once

// Weighted-homogeneity detection and the Milnor number of weighted homogeneous
// germs as a product over reciprocal weights.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "milnor/poly.hpp"

namespace milnor {

// Reciprocal weights a_i > 0 such that every monomial z^e of the germ
// satisfies sum_i a_i e_i = 1.
struct WeightVector {
    std::vector<mpq_class> a;
};

// Detects weights making the germ weighted homogeneous, using only the germ's
// own monomials.  A unique solvable system decides directly; underdetermined
// systems are resolved through the vertices of {M a = 1, a >= 0}: an
// all-positive vertex of minimal coordinate sum wins, otherwise the vertex
// centroid is returned when strictly positive (which happens iff any positive
// solution exists).  Germs with an unused variable yield nullopt.
std::optional<WeightVector> detect_weights(const Polynomial& germ);

// prod_i (1/a_i - 1); equals the Milnor number when the germ is an isolated
// weighted homogeneous singularity.
mpq_class milnor_orlik(const WeightVector& w);

}  // namespace milnor

#pragma once

// Coarse classification of an isolated hypersurface germ from its sectional
// Milnor sequence: smooth, A-type (generic hyperplane slice is a node), the
// corank-two family (generic slice is a cusp), or anything else.  The A-type
// verdict is cross-checked against the corank of the Hessian at the origin.

#include <cstdint>
#include <string>
#include <vector>

#include "milnor/local.hpp"
#include "milnor/poly.hpp"
#include "milnor/projective.hpp"

namespace milnor {

enum class CoarseClass { Smooth, AType, CorankTwoFamily, Other };

std::string to_string(CoarseClass c);

struct Classification {
    CoarseClass cls;
    std::int64_t k;  // A-type index (equal to mu) when cls == AType, else 0
    std::vector<std::int64_t> mu_sequence;
    int corank;  // corank of the Hessian of the germ at the origin
};

// Classify a germ with isolated singularity (NonIsolatedError otherwise).
// The verdicts "A-type" and "corank of the quadratic part <= 1 with mu >= 1"
// must agree; a disagreement (a failed random slice) raises InstabilityError.
Classification classify_germ(const Polynomial& germ, std::uint64_t seed, int trials, Budget& budget);

Classification classify_point(const Hypersurface& h, const ProjectivePoint& x, std::uint64_t seed, int trials,
                              Budget& budget);

}  // namespace milnor

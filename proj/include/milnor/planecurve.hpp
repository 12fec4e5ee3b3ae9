#pragma once

// Plane-curve specific machinery (curves in P^2 and germs in two variables):
// multivariate resultants via fraction-free Bareiss on the Sylvester matrix,
// counts of distinct intersection points and of distinct tangent lines,
// an elimination-based recomputation of the polar degree, a completeness
// count for singular-point lists, and the polar degree product rule for
// reducible curves.

#include <cstdint>
#include <vector>

#include "milnor/local.hpp"
#include "milnor/poly.hpp"
#include "milnor/projective.hpp"

namespace milnor {

// Resultant of p and q with respect to `var` (both must have positive degree
// in it), computed fraction-free; exact over Q[remaining variables].
Polynomial resultant(const Polynomial& p, const Polynomial& q, int var);

// Number of distinct points of V(c1) cap V(c2) in P^2 over the complex
// numbers; the curves must not share a component.  Randomized (generic
// coordinates + resultant roots), cross-validated over three independent
// draws; disagreement raises InstabilityError.
std::int64_t distinct_intersection_count(const Polynomial& c1, const Polynomial& c2, std::uint64_t seed);

// Multiplicity m and number t of distinct lines in the tangent cone of a
// plane germ (distinct roots of the lowest homogeneous part as a binary form).
struct TangentCone {
    int mult;
    std::int64_t line_count;
};
TangentCone tangent_cone_lines(const Polynomial& germ);

// Number of distinct singular points of the curve over the complex numbers,
// counted through resultants of random combinations of the partials
// (independent of any supplied point list).
std::int64_t singular_point_count(const Hypersurface& curve, std::uint64_t seed);

// Polar degree recomputed by elimination: the gradient fiber over a random
// target is intersected via resultants and base points are subtracted.
// Cross-validated over three independent targets.
std::int64_t polar_degree_by_elimination(const Hypersurface& curve,
                                         const std::vector<ProjectivePoint>& singular_points,
                                         std::uint64_t seed);

// Product rule for the polar degree of a reducible curve g * h: it equals
// polar(g) + polar(h) + (#distinct points of g cap h) - 1.  Callers supply
// the singular points of each factor and of the product.
struct ProductRuleReport {
    std::int64_t product_polar;   // polar degree of g*h (Milnor-number route)
    std::int64_t factor_polar_g;  // polar degree of g
    std::int64_t factor_polar_h;  // polar degree of h
    std::int64_t crossings;       // distinct points of g cap h
    bool equal;                   // product_polar == g + h + crossings - 1
};
ProductRuleReport polar_product_rule(const Polynomial& g, const std::vector<ProjectivePoint>& sing_g,
                                     const Polynomial& h, const std::vector<ProjectivePoint>& sing_h,
                                     const std::vector<ProjectivePoint>& sing_product, std::uint64_t seed,
                                     Budget& budget);

}  // namespace milnor

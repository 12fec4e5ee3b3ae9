#pragma once

// Standard bases in the local ring Q[z]_<z> with respect to the anti-graded
// order declared in poly.hpp (local_compare), computed with Mora's tangent
// cone algorithm (normal forms with ecart selection, where the intermediate
// polynomial itself may join the reducer set).  On top of that: colengths of
// zero-dimensional ideals, Milnor and Tjurina numbers of germs at the origin,
// and the corank of the Hessian.

#include <cstdint>
#include <optional>
#include <vector>

#include "milnor/errors.hpp"
#include "milnor/poly.hpp"

namespace milnor {

// Counts leading-term cancellations across one computation; when the count
// passes `limit`, BudgetExceededError is raised so runaway reductions fail
// distinctly instead of spinning.
struct Budget {
    std::uint64_t limit = 1'000'000;
    std::uint64_t used = 0;
    void charge() {
        if (++used > limit) throw BudgetExceededError(limit);
    }
};

struct StandardBasis {
    // Minimal standard basis: primitive integer coefficients, and no leading
    // monomial divides another.
    std::vector<Polynomial> elements;
    // Local leading monomials of `elements` (minimal generators of the
    // leading ideal), in the same order.
    std::vector<Exponents> leading;
    // Number of standard monomials (monomials outside the leading ideal);
    // nullopt means the quotient is infinite-dimensional.
    std::optional<std::int64_t> colength;
};

// Leading monomial under the local order; the polynomial must be nonzero.
Exponents local_leading_exponent(const Polynomial& p);

// Mora weak normal form of g with respect to gens: the result is either zero
// or has a leading monomial not divisible by any leading monomial of gens.
Polynomial mora_normal_form(const Polynomial& g, const std::vector<Polynomial>& gens, Budget& budget);

StandardBasis standard_basis(const std::vector<Polynomial>& gens, Budget& budget);

// Colength of the monomial ideal generated by `leading` (count of monomials
// outside it); nullopt when infinite, i.e. when some variable has no pure
// power among the generators.
std::optional<std::int64_t> monomial_colength(const std::vector<Exponents>& leading, int nvars);

// mu = dim_Q Q[z]_<z> / (df/dz0, ..., df/dz{n-1}); requires f(0) = 0.
std::optional<std::int64_t> milnor_number(const Polynomial& germ, Budget& budget);

// tau = dim_Q Q[z]_<z> / (f, df/dz0, ..., df/dz{n-1}); requires f(0) = 0.
std::optional<std::int64_t> tjurina_number(const Polynomial& germ, Budget& budget);

// Corank of the Hessian matrix of f at the origin.
int hessian_corank(const Polynomial& germ);

}  // namespace milnor

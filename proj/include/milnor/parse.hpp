#pragma once

// Text form of polynomials.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := coefficient | variable ('^' nat)? | '(' expr ')' ('^' nat)?
//   variable    := ('z' | 'x') nat
//   coefficient := integer | integer '/' positive-integer
//
// Whitespace is insignificant; there is no implicit multiplication.  A leading
// '-' before the first term is accepted.  to_string() emits canonical text
// (graded-lex descending terms) that parses back to the same polynomial.

#include <string>

#include "milnor/poly.hpp"

namespace milnor {

// nvars < 0 infers the ring arity as (largest variable index) + 1.
Polynomial parse_polynomial(const std::string& text, int nvars = -1);

std::string to_string(const Polynomial& p, char var = 'z');
std::string to_string(const mpq_class& c);

}  // namespace milnor

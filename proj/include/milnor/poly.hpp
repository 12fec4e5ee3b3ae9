#pragma once

// Sparse multivariate polynomials over Q in variables z0..z{n-1}, kept in a
// canonical form: terms sorted by graded lexicographic order, descending, with
// no zero coefficients.  Two polynomials are equal iff their representations
// are equal.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "milnor/errors.hpp"

namespace milnor {

using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

// Graded lexicographic order: compare total degree first, ties broken
// lexicographically.  Returns -1, 0 or +1 as a <, = or > b.
int grlex_compare(const Exponents& a, const Exponents& b);

// The local order used for standard bases: a monomial is larger when its total
// degree is *smaller* (so 1 > z0 > z0^2), ties broken reverse lexicographically
// (the last nonzero entry of a - b negative makes a larger).
int local_compare(const Exponents& a, const Exponents& b);

bool exp_divides(const Exponents& a, const Exponents& b);  // a | b componentwise
Exponents exp_add(const Exponents& a, const Exponents& b);
Exponents exp_sub(const Exponents& a, const Exponents& b);  // requires b | a
Exponents exp_lcm(const Exponents& a, const Exponents& b);

struct Term {
    Exponents exp;
    mpq_class coeff;
    bool operator==(const Term& o) const { return exp == o.exp && coeff == o.coeff; }
};

class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const mpq_class& c);
    static Polynomial variable(int nvars, int i);
    static Polynomial monomial(int nvars, Exponents e, const mpq_class& c);
    // Builds canonical form from an arbitrary term list (sorts, merges, prunes).
    static Polynomial from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    int degree() const;  // max total degree, -1 for the zero polynomial
    int order() const;   // min total degree, -1 for the zero polynomial
    bool is_homogeneous() const;
    bool depends_on(int var) const;
    int degree_in(int var) const;  // max exponent of `var`, -1 for zero

    mpq_class coeff(const Exponents& e) const;
    mpq_class constant_coeff() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const mpq_class& c);
    friend Polynomial operator*(Polynomial a, const mpq_class& c) { return a *= c; }
    friend Polynomial operator*(const mpq_class& c, Polynomial a) { return a *= c; }
    bool operator==(const Polynomial& o) const = default;

    Polynomial pow(int k) const;
    Polynomial derivative(int var) const;
    mpq_class evaluate(const std::vector<mpq_class>& point) const;

    // Ring map z_i -> images[i]; the images live in a common target ring and
    // determine the arity of the result.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    // Same polynomial viewed in a larger ring (fresh trailing variables).
    Polynomial extended(int new_nvars) const;
    // Insert `k` fresh variables in front (z_i becomes z_{i+k}).
    Polynomial shifted_up(int k) const;

    // Set variable `var` to 1 and drop it from the ring.
    Polynomial dehomogenized(int var) const;

    Polynomial homogeneous_part(int d) const;
    Polynomial lowest_part() const { return homogeneous_part(order()); }

    // Divides out content and denominators: integer coefficients with gcd 1
    // and a positive coefficient on the grlex-leading term.
    Polynomial primitive_part() const;

    // Exact division: requires that `b` divides *this in Q[z]; anything else
    // raises PreconditionError.
    Polynomial divide_exact(const Polynomial& b) const;

  private:
    int nvars_ = 0;
    std::vector<Term> terms_;
    void normalize();
};

// p(M z) for an nvars(p) x k rational matrix M: each z_i is replaced by the
// linear form given by row i.  The result has k variables.
Polynomial substitute_linear(const Polynomial& p, const std::vector<std::vector<mpq_class>>& m);

// A square invertible rational coordinate change z -> M z.
class LinearChange {
  public:
    explicit LinearChange(std::vector<std::vector<mpq_class>> m);
    static LinearChange identity(int n);

    int size() const { return static_cast<int>(m_.size()); }
    const std::vector<std::vector<mpq_class>>& matrix() const { return m_; }
    LinearChange inverse() const;
    LinearChange compose(const LinearChange& inner) const;  // first inner, then *this
    Polynomial apply(const Polynomial& p) const;            // p(M z)

  private:
    std::vector<std::vector<mpq_class>> m_;
};

}  // namespace milnor

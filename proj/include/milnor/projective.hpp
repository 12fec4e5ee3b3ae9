#pragma once

// Projective hypersurfaces with isolated singularities: germs at points,
// multiplicities, apex spaces (cone detection), sectional Milnor sequences,
// polar degrees and determinant-of-Hessian vanishing.

#include <cstdint>
#include <string>
#include <vector>

#include "milnor/local.hpp"
#include "milnor/poly.hpp"

namespace milnor {

class ProjectivePoint {
  public:
    explicit ProjectivePoint(std::vector<mpz_class> coords);
    static ProjectivePoint from_ints(const std::vector<long>& coords);

    int ambient_dim() const { return static_cast<int>(c_.size()) - 1; }  // lives in P^n
    const std::vector<mpz_class>& coords() const { return c_; }
    bool operator==(const ProjectivePoint& o) const = default;
    std::string str() const;  // "a:b:c"

  private:
    std::vector<mpz_class> c_;  // canonical: coprime, first nonzero entry positive
};

class Hypersurface {
  public:
    explicit Hypersurface(Polynomial h);  // homogeneous, nonzero, degree >= 1, >= 3 variables

    const Polynomial& poly() const { return h_; }
    int n() const { return h_.nvars() - 1; }  // ambient P^n
    int degree() const { return h_.degree(); }
    bool contains(const ProjectivePoint& x) const;

  private:
    Polynomial h_;
};

// The germ of the hypersurface at x in local affine coordinates: coordinates
// are moved so x becomes the origin of the chart z_pivot = 1 (pivot = first
// nonzero coordinate of x).  Result has n variables and vanishes at 0.
Polynomial germ_at(const Hypersurface& h, const ProjectivePoint& x);

int multiplicity(const Hypersurface& h, const ProjectivePoint& x);

// Directions a with sum_i a_i dh/dz_i = 0, i.e. translations fixing h; the
// hypersurface is a cone iff the space is nonzero.
struct ApexSpace {
    std::vector<std::vector<mpz_class>> basis;  // primitive integer vectors
    int dim() const { return static_cast<int>(basis.size()); }
    bool is_cone() const { return dim() > 0; }
    bool contains(const ProjectivePoint& x) const;
};
ApexSpace apex_space(const Hypersurface& h);

// mu^(i) for i = 0..n of a germ with isolated singularity: mu of the
// restriction to a generic i-dimensional linear slice, computed as the minimum
// over `trials` random slices (coefficients in [-997, 997]).  Raises
// NonIsolatedError when mu^(n) is infinite.
std::vector<std::int64_t> germ_sectional_sequence(const Polynomial& germ, std::uint64_t seed, int trials,
                                                  Budget& budget);
std::vector<std::int64_t> sectional_milnor_sequence(const Hypersurface& h, const ProjectivePoint& x,
                                                    std::uint64_t seed, int trials, Budget& budget);

// (d-1)^n minus the total Milnor number of the supplied singular points, which
// the caller asserts to be the complete singular locus.
std::int64_t polar_degree(const Hypersurface& h, const std::vector<ProjectivePoint>& singular_points,
                          Budget& budget);

// Monte-Carlo test of det Hess(h) == 0 with an exact failure bound: `samples`
// evaluations at integer points in [-10^4, 10^4]^({n+1}).  A nonzero sample is
// a certificate; all-zero samples give vanishes=true with the stated bound on
// the probability that a nonzero determinant slipped through.
struct HessianVerdict {
    bool vanishes;
    bool certain;
    int samples;
    mpq_class failure_bound;
};
HessianVerdict hessian_vanishes(const Hypersurface& h, std::uint64_t seed, int samples = 8);

// Degree lower bounds at each supplied singular point: polar >= (m-1)^(n-1)
// and polar >= mu^(n-1), both skipped when the hypersurface is a cone with
// apex at the point.  Also records the sequence itself.
struct PointBounds {
    ProjectivePoint point;
    int mult;
    std::vector<std::int64_t> mu_sequence;
    bool apex;                  // cone with apex at this point: bounds not asserted
    bool mult_bound_ok;         // polar >= (mult-1)^(n-1)
    bool sectional_bound_ok;    // polar >= mu^(n-1)
    bool log_convex;            // mu^(i-1) mu^(i+1) >= mu^(i)^2 along the sequence
    bool first_step_ok;         // mu^(0) = 1 and mu^(1) = mult - 1
};
struct BoundsReport {
    std::int64_t polar;
    std::vector<PointBounds> points;
    bool all_ok;
};
BoundsReport degree_bounds_report(const Hypersurface& h, const std::vector<ProjectivePoint>& singular_points,
                                  std::uint64_t seed, int trials, Budget& budget);

}  // namespace milnor

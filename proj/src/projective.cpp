#include "milnor/projective.hpp"

#include <algorithm>

#include "milnor/linalg.hpp"
#include "milnor/rng.hpp"

namespace milnor {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

ProjectivePoint::ProjectivePoint(std::vector<mpz_class> coords) : c_(std::move(coords)) {
    if (c_.size() < 2) throw PreconditionError("projective point needs at least two coordinates");
    mpz_class g = 0;
    for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) throw PreconditionError("projective point cannot be the zero vector");
    for (auto& x : c_) x /= g;
    for (const auto& x : c_) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : c_) y = -y;
        break;
    }
}

ProjectivePoint ProjectivePoint::from_ints(const std::vector<long>& coords) {
    std::vector<mpz_class> c(coords.begin(), coords.end());
    return ProjectivePoint(std::move(c));
}

std::string ProjectivePoint::str() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ':';
        s += c_[i].get_str();
    }
    return s;
}

Hypersurface::Hypersurface(Polynomial h) : h_(std::move(h)) {
    if (h_.is_zero()) throw PreconditionError("hypersurface polynomial is zero");
    if (h_.nvars() < 3) throw PreconditionError("hypersurface needs an ambient P^n with n >= 2");
    if (!h_.is_homogeneous()) throw PreconditionError("hypersurface polynomial is not homogeneous");
    if (h_.degree() < 1) throw PreconditionError("hypersurface degree must be positive");
}

bool Hypersurface::contains(const ProjectivePoint& x) const {
    if (x.ambient_dim() + 1 != h_.nvars()) throw PreconditionError("point/hypersurface arity mismatch");
    std::vector<mpq_class> pt(x.coords().begin(), x.coords().end());
    return h_.evaluate(pt) == 0;
}

Polynomial germ_at(const Hypersurface& h, const ProjectivePoint& x) {
    if (!h.contains(x)) throw PreconditionError("point does not lie on the hypersurface");
    int nv = h.poly().nvars();
    int pivot = 0;
    while (x.coords()[pivot] == 0) ++pivot;
    // Columns: the point itself, then the standard vectors e_j (j != pivot);
    // determinant is +-x_pivot != 0.
    std::vector<std::vector<mpq_class>> m(nv, std::vector<mpq_class>(nv, 0));
    for (int i = 0; i < nv; ++i) m[i][0] = mpq_class(x.coords()[i]);
    int col = 1;
    for (int j = 0; j < nv; ++j) {
        if (j == pivot) continue;
        m[j][col++] = 1;
    }
    Polynomial q = substitute_linear(h.poly(), m);
    return q.dehomogenized(0);
}

int multiplicity(const Hypersurface& h, const ProjectivePoint& x) {
    Polynomial f = germ_at(h, x);
    if (f.is_zero()) throw PreconditionError("hypersurface vanishes identically near the point");
    return f.order();
}

bool ApexSpace::contains(const ProjectivePoint& x) const {
    if (basis.empty()) return false;
    // x in span(basis) iff appending x does not raise the rank
    QMatrix m;
    for (const auto& v : basis) m.emplace_back(v.begin(), v.end());
    int r0 = rank(m);
    m.emplace_back(x.coords().begin(), x.coords().end());
    return rank(m) == r0;
}

ApexSpace apex_space(const Hypersurface& h) {
    int nv = h.poly().nvars();
    std::vector<Polynomial> partials;
    partials.reserve(nv);
    for (int v = 0; v < nv; ++v) partials.push_back(h.poly().derivative(v));
    // Rows indexed by monomials appearing in any partial; columns by variable.
    std::vector<Exponents> rows;
    for (const auto& p : partials)
        for (const auto& t : p.terms())
            if (std::find(rows.begin(), rows.end(), t.exp) == rows.end()) rows.push_back(t.exp);
    QMatrix a(rows.size(), QRow(nv, 0));
    for (int v = 0; v < nv; ++v)
        for (const auto& t : partials[v].terms()) {
            std::size_t r = std::find(rows.begin(), rows.end(), t.exp) - rows.begin();
            a[r][v] = t.coeff;
        }
    ApexSpace out;
    for (const auto& vec : nullspace(a)) {
        mpz_class den = 1;
        for (const auto& q : vec) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
        std::vector<mpz_class> w(vec.size());
        mpz_class g = 0;
        for (std::size_t i = 0; i < vec.size(); ++i) {
            w[i] = vec[i].get_num() * (den / vec[i].get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
        }
        for (auto& z : w) z /= g;
        out.basis.push_back(std::move(w));
    }
    return out;
}

std::vector<std::int64_t> germ_sectional_sequence(const Polynomial& germ, std::uint64_t seed, int trials,
                                                  Budget& budget) {
    int n = germ.nvars();
    if (trials < 1) throw PreconditionError("sectional sequence needs at least one trial");
    auto mu_n = milnor_number(germ, budget);
    if (!mu_n) throw NonIsolatedError("sectional sequence of a non-isolated singularity");
    std::vector<std::int64_t> seq(n + 1);
    seq[0] = 1;
    seq[n] = *mu_n;
    for (int i = 1; i < n; ++i) {
        std::optional<std::int64_t> best;
        for (int t = 0; t < trials; ++t) {
            Rng rng(derive_seed(seed, "slice:" + std::to_string(i) + ":" + std::to_string(t)));
            QMatrix l;
            for (;;) {
                l.assign(n, QRow(i, 0));
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < i; ++c) l[r][c] = rng.int_in(-997, 997);
                if (rank(l) == i) break;
            }
            // Column-reduce to the graph-form basis of the same column
            // space: the sliced subspace (hence its Milnor number) is
            // unchanged, while the pivot rows keep their variables plain
            // coordinates, so a sparse germ stays sparse after substitution.
            QMatrix lt(i, QRow(n));
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < i; ++c) lt[c][r] = l[r][c];
            reduced_row_echelon(lt);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < i; ++c) l[r][c] = lt[c][r];
            Polynomial slice = substitute_linear(germ, l);
            auto mu = milnor_number(slice, budget);
            if (mu && (!best || *mu < *best)) best = *mu;
        }
        if (!best) throw InstabilityError("every random slice of dimension " + std::to_string(i) +
                                          " was degenerate");
        seq[i] = *best;
    }
    if (n >= 1 && seq[1] != germ.order() - 1)
        throw InstabilityError("sectional mu^(1) disagrees with multiplicity - 1");
    return seq;
}

std::vector<std::int64_t> sectional_milnor_sequence(const Hypersurface& h, const ProjectivePoint& x,
                                                    std::uint64_t seed, int trials, Budget& budget) {
    return germ_sectional_sequence(germ_at(h, x), seed, trials, budget);
}

std::int64_t polar_degree(const Hypersurface& h, const std::vector<ProjectivePoint>& singular_points,
                          Budget& budget) {
    for (std::size_t i = 0; i < singular_points.size(); ++i)
        for (std::size_t j = i + 1; j < singular_points.size(); ++j)
            if (singular_points[i] == singular_points[j])
                throw PreconditionError("duplicate singular point " + singular_points[i].str());
    std::int64_t total_mu = 0;
    for (const auto& x : singular_points) {
        Polynomial f = germ_at(h, x);
        if (f.order() < 2) throw PreconditionError("supplied point " + x.str() + " is not singular");
        auto mu = milnor_number(f, budget);
        if (!mu) throw NonIsolatedError("singularity at " + x.str() + " is not isolated");
        total_mu += *mu;
    }
    std::int64_t full = ipow(h.degree() - 1, h.n());
    if (total_mu > full)
        throw PreconditionError("total Milnor number exceeds (d-1)^n; the point list is inconsistent");
    return full - total_mu;
}

HessianVerdict hessian_vanishes(const Hypersurface& h, std::uint64_t seed, int samples) {
    int nv = h.poly().nvars();
    std::vector<std::vector<Polynomial>> hess(nv, std::vector<Polynomial>(nv));
    for (int i = 0; i < nv; ++i)
        for (int j = i; j < nv; ++j) {
            hess[i][j] = h.poly().derivative(i).derivative(j);
            if (j != i) hess[j][i] = hess[i][j];
        }
    Rng rng(derive_seed(seed, "hessian"));
    const long box = 10000;
    int det_degree = (nv) * (h.degree() - 2);  // degree bound for det Hess
    for (int s = 0; s < samples; ++s) {
        std::vector<mpq_class> pt(nv);
        for (int i = 0; i < nv; ++i) pt[i] = rng.int_in(-box, box);
        QMatrix m(nv, QRow(nv));
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j < nv; ++j) m[i][j] = hess[i][j].evaluate(pt);
        if (determinant(std::move(m)) != 0)
            return {false, true, s + 1, mpq_class(0)};
    }
    // all zero: Schwartz-Zippel failure bound (det degree / sample space)^samples
    mpq_class bound = 0;
    if (det_degree > 0) {
        mpq_class per(det_degree, 2 * box + 1);
        bound = 1;
        for (int s = 0; s < samples; ++s) bound *= per;
    }
    return {true, bound == 0, samples, bound};
}

BoundsReport degree_bounds_report(const Hypersurface& h, const std::vector<ProjectivePoint>& singular_points,
                                  std::uint64_t seed, int trials, Budget& budget) {
    BoundsReport rep;
    rep.polar = polar_degree(h, singular_points, budget);
    rep.all_ok = true;
    ApexSpace apex = apex_space(h);
    int n = h.n();
    for (const auto& x : singular_points) {
        Polynomial f = germ_at(h, x);
        auto seq = germ_sectional_sequence(f, derive_seed(seed, "bounds:" + x.str()), trials, budget);
        PointBounds pb{x, f.order(), seq, apex.contains(x), true, true, true, true};
        pb.first_step_ok = seq[0] == 1 && seq[1] == pb.mult - 1;
        for (int i = 1; i < n; ++i)
            if (seq[i - 1] * seq[i + 1] < seq[i] * seq[i]) pb.log_convex = false;
        if (!pb.apex) {
            pb.mult_bound_ok = rep.polar >= ipow(pb.mult - 1, n - 1);
            pb.sectional_bound_ok = rep.polar >= seq[n - 1];
        }
        rep.all_ok = rep.all_ok && pb.first_step_ok && pb.log_convex && pb.mult_bound_ok && pb.sectional_bound_ok;
        rep.points.push_back(std::move(pb));
    }
    return rep;
}

}  // namespace milnor

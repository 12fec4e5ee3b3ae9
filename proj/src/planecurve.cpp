#include "milnor/planecurve.hpp"

#include <map>
#include <optional>

#include "milnor/linalg.hpp"
#include "milnor/rng.hpp"

namespace milnor {

namespace {

// --- dense univariate polynomials over Q (index = degree) -------------------

using UPoly = std::vector<mpq_class>;

int udeg(const UPoly& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d >= 0 && p[d] == 0) --d;
    return d;
}

UPoly uderiv(const UPoly& p) {
    UPoly r;
    for (std::size_t k = 1; k < p.size(); ++k) r.push_back(p[k] * static_cast<long>(k));
    return r;
}

UPoly urem(UPoly a, const UPoly& b) {
    int db = udeg(b);
    for (int da = udeg(a); da >= db; da = udeg(a)) {
        mpq_class f = a[da] / b[db];
        for (int j = 0; j <= db; ++j) a[da - db + j] -= f * b[j];
        a[da] = 0;  // guard against rounding-free but explicit cancellation
    }
    return a;
}

UPoly ugcd(UPoly a, UPoly b) {
    while (udeg(b) >= 0) {
        UPoly r = urem(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    int da = udeg(a);
    if (da >= 0) {
        mpq_class lc = a[da];
        for (auto& c : a) c /= lc;
    }
    return a;
}

// number of distinct complex roots: deg p - deg gcd(p, p')
int distinct_roots(const UPoly& p) {
    int d = udeg(p);
    if (d <= 0) return 0;
    return d - udeg(ugcd(p, uderiv(p)));
}

// Reads a nonzero binary form in variables (va, vb) of a polynomial whose
// other variables are absent; returns dense coefficients of vb-powers plus the
// form degree.
std::pair<UPoly, int> binary_form(const Polynomial& r, int va, int vb) {
    int d = r.degree();
    UPoly u(d + 1, 0);
    for (const auto& t : r.terms()) {
        for (int v = 0; v < r.nvars(); ++v)
            if (v != va && v != vb && t.exp[v] != 0)
                throw PreconditionError("polynomial is not a binary form in the expected variables");
        u[t.exp[vb]] = t.coeff;
    }
    return {std::move(u), d};
}

// distinct projective roots of a nonzero binary form, including (0:1)
std::int64_t binary_distinct_roots(const Polynomial& r, int va, int vb) {
    auto [u, d] = binary_form(r, va, vb);
    std::int64_t count = distinct_roots(u);
    if (udeg(u) < d) ++count;  // root at (0:1)
    return count;
}

std::vector<Polynomial> coeffs_in(const Polynomial& p, int var) {
    int dp = p.degree_in(var);
    std::vector<Polynomial> c(dp + 1, Polynomial(p.nvars()));
    for (const auto& t : p.terms()) {
        Exponents e = t.exp;
        int k = e[var];
        e[var] = 0;
        c[k] += Polynomial::monomial(p.nvars(), std::move(e), t.coeff);
    }
    return c;
}

// --- randomized helpers ------------------------------------------------------

std::vector<std::vector<mpq_class>> random_change(Rng& rng, int n, long box) {
    for (;;) {
        QMatrix m(n, QRow(n, 0));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = rng.int_in(-box, box);
        if (determinant(m) != 0) return m;
    }
}

// One randomized count of |V(c1) cap V(c2)|: generic coordinates, resultant,
// distinct roots of the resulting binary form.  nullopt = unusable draw.
// shared_component is set when the curves provably share a component.
std::optional<std::int64_t> common_zeros_once(const Polynomial& c1, const Polynomial& c2, Rng& rng,
                                              bool* shared_component) {
    *shared_component = false;
    int d1 = c1.degree(), d2 = c2.degree();
    auto m = random_change(rng, 3, 49);
    Polynomial g1 = substitute_linear(c1, m);
    Polynomial g2 = substitute_linear(c2, m);
    // (0:0:1) must avoid both curves so that projection from it is defined
    // everywhere on them: the z2-corner coefficients must survive.
    if (g1.coeff(Exponents{0, 0, d1}) == 0 || g2.coeff(Exponents{0, 0, d2}) == 0) return std::nullopt;
    Polynomial res = resultant(g1, g2, 2);
    if (res.is_zero()) {
        *shared_component = true;
        return std::nullopt;
    }
    return binary_distinct_roots(res, 0, 1);
}

std::int64_t stable_common_zeros(const Polynomial& c1, const Polynomial& c2, std::uint64_t seed,
                                 const char* label) {
    std::optional<std::int64_t> agreed;
    for (int rep = 0; rep < 3; ++rep) {
        Rng rng(derive_seed(seed, std::string(label) + ":" + std::to_string(rep)));
        std::optional<std::int64_t> count;
        for (int attempt = 0; attempt < 60 && !count; ++attempt) {
            bool shared = false;
            count = common_zeros_once(c1, c2, rng, &shared);
            if (shared) throw PreconditionError("curves share a component; intersection is not finite");
        }
        if (!count) throw InstabilityError("no usable coordinate change found for intersection count");
        if (agreed && *agreed != *count)
            throw InstabilityError("intersection counts disagree across reseeded draws");
        agreed = count;
    }
    return *agreed;
}

void require_plane_curve(const Polynomial& c) {
    if (c.is_zero() || c.nvars() != 3 || !c.is_homogeneous() || c.degree() < 1)
        throw PreconditionError("expected a nonzero homogeneous polynomial in three variables");
}

}  // namespace

Polynomial resultant(const Polynomial& p, const Polynomial& q, int var) {
    if (p.is_zero() || q.is_zero()) throw PreconditionError("resultant of the zero polynomial");
    if (p.nvars() != q.nvars()) throw PreconditionError("resultant operands live in different rings");
    int dp = p.degree_in(var), dq = q.degree_in(var);
    if (dp < 1 || dq < 1)
        throw PreconditionError("resultant requires positive degree in the eliminated variable");
    auto cp = coeffs_in(p, var), cq = coeffs_in(q, var);
    int n = dp + dq;
    Polynomial zero(p.nvars());
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, zero));
    for (int i = 0; i < dq; ++i)
        for (int k = 0; k <= dp; ++k) m[i][i + k] = cp[dp - k];
    for (int i = 0; i < dp; ++i)
        for (int k = 0; k <= dq; ++k) m[dq + i][i + k] = cq[dq - k];

    // fraction-free Bareiss elimination with row pivoting
    Polynomial prev = Polynomial::constant(p.nvars(), 1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!m[r][k].is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) return zero;
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).divide_exact(prev);
            m[i][k] = zero;
        }
        prev = m[k][k];
    }
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

std::int64_t distinct_intersection_count(const Polynomial& c1, const Polynomial& c2, std::uint64_t seed) {
    require_plane_curve(c1);
    require_plane_curve(c2);
    return stable_common_zeros(c1, c2, seed, "dic");
}

TangentCone tangent_cone_lines(const Polynomial& germ) {
    if (germ.is_zero() || germ.nvars() != 2) throw PreconditionError("tangent cone needs a nonzero germ in two variables");
    if (germ.constant_coeff() != 0) throw PreconditionError("germ does not vanish at the origin");
    Polynomial low = germ.lowest_part();
    return {germ.order(), binary_distinct_roots(low, 0, 1)};
}

std::int64_t singular_point_count(const Hypersurface& curve, std::uint64_t seed) {
    if (curve.n() != 2) throw PreconditionError("singular point counting is implemented for plane curves");
    int d = curve.degree();
    if (d == 1) return 0;
    // Each draw intersects three independent random pencil pairs of the
    // partials: a spurious Bezout point must then survive three gcds at once.
    // Draws vote; a majority of the five must agree on the count.
    std::map<std::int64_t, int> votes;
    for (int rep = 0; rep < 5; ++rep) {
        Rng rng(derive_seed(seed, "spc:" + std::to_string(rep)));
        std::optional<std::int64_t> count;
        for (int attempt = 0; attempt < 60 && !count; ++attempt) {
            // generic coordinates for the whole computation
            auto chg = random_change(rng, 3, 19);
            Polynomial hh = substitute_linear(curve.poly(), chg);
            std::vector<Polynomial> grad{hh.derivative(0), hh.derivative(1), hh.derivative(2)};
            auto combo = [&]() {
                Polynomial u = Polynomial::constant(3, rng.nonzero_in(-99, 99)) * grad[0];
                u += Polynomial::constant(3, rng.nonzero_in(-99, 99)) * grad[1];
                u += Polynomial::constant(3, rng.nonzero_in(-99, 99)) * grad[2];
                return u;
            };
            auto exact_div = [](const UPoly& a, const UPoly& b) {
                UPoly quot(a.size(), 0);
                UPoly rem = a;
                int db = udeg(b);
                for (int da = udeg(rem); da >= db; da = udeg(rem)) {
                    mpq_class f = rem[da] / b[db];
                    quot[da - db] = f;
                    for (int j = 0; j <= db; ++j) rem[da - db + j] -= f * b[j];
                }
                return quot;
            };
            Exponents corner{0, 0, d - 1};
            bool bad = false;
            std::optional<UPoly> common;  // gcd of the squarefree parts so far
            bool all_drop = true;         // every resultant has a root at (0:1)
            for (int pair = 0; pair < 3 && !bad; ++pair) {
                Polynomial u = combo();
                Polynomial v = combo();
                if (u.is_zero() || v.is_zero() || u.coeff(corner) == 0 || v.coeff(corner) == 0) {
                    bad = true;
                    break;
                }
                Polynomial r = resultant(u, v, 2);
                if (r.is_zero()) {  // combos shared a factor; redraw
                    bad = true;
                    break;
                }
                auto [b, deg] = binary_form(r, 0, 1);
                UPoly s = ugcd(b, uderiv(b));  // b / gcd(b, b') = squarefree part
                UPoly f = exact_div(b, s);
                common = common ? ugcd(*common, f) : f;
                all_drop = all_drop && udeg(b) < deg;
            }
            if (bad) continue;
            std::int64_t c = udeg(*common);
            if (all_drop) ++c;  // common root at (0:1)
            count = c;
        }
        if (!count) throw PreconditionError("partials appear degenerate; is the curve reduced?");
        ++votes[*count];
    }
    for (const auto& [value, n] : votes)
        if (n >= 3) return value;
    throw InstabilityError("singular point counts disagree across reseeded draws");
}

std::int64_t polar_degree_by_elimination(const Hypersurface& curve,
                                         const std::vector<ProjectivePoint>& singular_points,
                                         std::uint64_t seed) {
    if (curve.n() != 2) throw PreconditionError("elimination-based polar degree needs a plane curve");
    int d = curve.degree();
    if (d == 1) {
        if (!singular_points.empty()) throw PreconditionError("a line has no singular points");
        return 0;
    }
    const Polynomial& h = curve.poly();
    Polynomial h0 = h.derivative(0), h1 = h.derivative(1), h2 = h.derivative(2);
    std::optional<std::int64_t> agreed;
    for (int rep = 0; rep < 3; ++rep) {
        Rng rng(derive_seed(seed, "pde:" + std::to_string(rep)));
        std::optional<std::int64_t> result;
        for (int attempt = 0; attempt < 60 && !result; ++attempt) {
            long t0 = rng.nonzero_in(-97, 97), t1 = rng.nonzero_in(-97, 97), t2 = rng.nonzero_in(-97, 97);
            // fiber of the gradient map over (t0:t1:t2): because t1 != 0 the
            // two minors below already cut it out
            Polynomial g1 = Polynomial::constant(3, t1) * h0 - Polynomial::constant(3, t0) * h1;
            Polynomial g2 = Polynomial::constant(3, t2) * h1 - Polynomial::constant(3, t1) * h2;
            if (g1.is_zero() || g2.is_zero()) continue;
            for (const auto& x : singular_points) {
                std::vector<mpq_class> pt(x.coords().begin(), x.coords().end());
                if (g1.evaluate(pt) != 0 || g2.evaluate(pt) != 0)
                    throw PreconditionError("supplied point " + x.str() + " is not singular");
            }
            bool shared = false;
            auto n = common_zeros_once(g1, g2, rng, &shared);
            if (shared || !n) continue;  // degenerate target or unusable draw
            std::int64_t r = *n - static_cast<std::int64_t>(singular_points.size());
            if (r < 0) continue;  // projection merged points; redraw
            result = r;
        }
        if (!result) throw InstabilityError("no generic gradient target found");
        if (agreed && *agreed != *result)
            throw InstabilityError("elimination polar degrees disagree across reseeded draws");
        agreed = result;
    }
    return *agreed;
}

ProductRuleReport polar_product_rule(const Polynomial& g, const std::vector<ProjectivePoint>& sing_g,
                                     const Polynomial& h, const std::vector<ProjectivePoint>& sing_h,
                                     const std::vector<ProjectivePoint>& sing_product, std::uint64_t seed,
                                     Budget& budget) {
    require_plane_curve(g);
    require_plane_curve(h);
    ProductRuleReport rep;
    rep.product_polar = polar_degree(Hypersurface(g * h), sing_product, budget);
    rep.factor_polar_g = polar_degree(Hypersurface(g), sing_g, budget);
    rep.factor_polar_h = polar_degree(Hypersurface(h), sing_h, budget);
    rep.crossings = distinct_intersection_count(g, h, derive_seed(seed, "product-rule"));
    rep.equal = rep.product_polar == rep.factor_polar_g + rep.factor_polar_h + rep.crossings - 1;
    return rep;
}

}  // namespace milnor

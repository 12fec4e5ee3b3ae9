#include "milnor/puiseux.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <map>
#include <utility>
#include <vector>

#include "milnor/errors.hpp"

namespace milnor {

namespace {

// Variable convention inside this file: a computation runs over a tower with
// levels 0..K-1, and every polynomial places the tower variables first.  The
// germ variables (x, y) sit at indices K, K+1; edge polynomials use a single
// extra variable T at index K.  Extending the tower appends variables, so
// existing indices stay stable.

// Thrown when a tower modulus is discovered to factor as a*b.  Caught by the
// branch-count driver, which re-runs the computation in both factor towers.
struct SplitSignal {
    int level;
    Polynomial a;
    Polynomial b;
};

// Truncate or extend a polynomial to exactly n variables.  Truncated
// variables must be absent.
Polynomial set_arity(const Polynomial& p, int n) {
    if (n >= p.nvars()) return p.extended(n);
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const Term& t : p.terms()) {
        for (int v = n; v < p.nvars(); ++v) {
            if (t.exp[v] != 0) throw PreconditionError("internal: arity truncation drops a used variable");
        }
        Exponents e(t.exp.begin(), t.exp.begin() + n);
        out.push_back({std::move(e), t.coeff});
    }
    return Polynomial::from_terms(n, std::move(out));
}

Polynomial xpow(int nvars, int var, int k) {
    Exponents e(nvars, 0);
    e[var] = k;
    return Polynomial::monomial(nvars, std::move(e), 1);
}

// Coefficient of var^k in p, as a polynomial in the remaining variables
// (same arity, exponent of var zeroed).
Polynomial coeff_at(const Polynomial& p, int var, int k) {
    std::vector<Term> out;
    for (const Term& t : p.terms()) {
        if (t.exp[var] != k) continue;
        Exponents e = t.exp;
        e[var] = 0;
        out.push_back({std::move(e), t.coeff});
    }
    return Polynomial::from_terms(p.nvars(), std::move(out));
}

class Tower {
  public:
    Tower() = default;

    int levels() const { return static_cast<int>(mods_.size()); }

    std::int64_t dim() const {
        std::int64_t d = 1;
        for (int k : degs_) d *= k;
        return d;
    }

    // Reduce tower variables 0..kmax-1 below their modulus degrees.  f may
    // carry any number of extra (free) variables beyond the tower block.
    Polynomial reduce_upto(Polynomial f, int kmax) const {
        if (f.nvars() < levels()) f = f.extended(levels());
        for (int k = kmax - 1; k >= 0; --k) {
            const Polynomial m = set_arity(mods_[k], f.nvars());
            while (true) {
                const int df = f.degree_in(k);
                if (df < degs_[k]) break;
                Polynomial c = coeff_at(f, k, df);
                f -= c * m * xpow(f.nvars(), k, df - degs_[k]);
            }
        }
        return f;
    }

    Polynomial reduce(Polynomial f) const { return reduce_upto(std::move(f), levels()); }

    bool is_zero(const Polynomial& e) const { return reduce(e).is_zero(); }

    // Division with remainder by a divisor monic in `var` (degree db there).
    // Only tower levels below `var` act on the coefficients, so `var` itself
    // stays a free polynomial variable even when it carries a modulus (as in
    // the Euclidean loop of invert, where the dividend is the modulus).
    std::pair<Polynomial, Polynomial> udivmod(Polynomial a, const Polynomial& b, int var, int db) const {
        const int bound = std::min(var, levels());
        Polynomial q = Polynomial::constant(a.nvars(), 0);
        a = reduce_upto(std::move(a), bound);
        while (true) {
            const int da = a.degree_in(var);
            if (a.is_zero() || da < db) break;
            const Polynomial t = coeff_at(a, var, da) * xpow(a.nvars(), var, da - db);
            q += t;
            a = reduce_upto(a - t * set_arity(b, a.nvars()), bound);
        }
        return {q, a};
    }

    Polynomial udiv_exact(const Polynomial& a, const Polynomial& b, int var, int db) const {
        auto [q, r] = udivmod(a, b, var, db);
        if (!r.is_zero()) throw PreconditionError("internal: inexact division in tower");
        return q;
    }

    // Inverse of a nonzero tower element.  A zero divisor throws SplitSignal.
    Polynomial invert(const Polynomial& e0) const {
        const Polynomial e = reduce(e0);
        if (e.is_zero()) throw PreconditionError("internal: inverting zero in tower");
        int k = levels() - 1;
        while (k >= 0 && e.degree_in(k) == 0) --k;
        if (k < 0) {
            mpq_class c = e.constant_coeff();
            return Polynomial::constant(e.nvars(), mpq_class(1) / c);
        }
        // Extended Euclid against the level-k modulus, tracking only the
        // Bezout coefficient of e.
        const int nv = e.nvars();
        Polynomial r0 = set_arity(mods_[k], nv);
        Polynomial s0 = Polynomial::constant(nv, 0);
        Polynomial r1 = e;
        Polynomial s1 = Polynomial::constant(nv, 1);
        while (true) {
            if (r1.is_zero()) {
                // gcd(e, modulus) = r0 is a proper monic factor: the modulus
                // splits as r0 * (modulus / r0).
                const Polynomial fa = set_arity(r0, levels());
                const Polynomial fb = udiv_exact(set_arity(mods_[k], levels()), fa, k, fa.degree_in(k));
                throw SplitSignal{k, fa, fb};
            }
            const int d1 = r1.degree_in(k);
            if (d1 == 0) {
                const Polynomial u = invert(r1);
                return reduce(u * s1);
            }
            const Polynomial li = invert(coeff_at(r1, k, d1));
            r1 = reduce_upto(li * r1, k);
            s1 = reduce_upto(li * s1, k);
            auto [q, r] = udivmod(r0, r1, k, d1);
            Polynomial s = reduce_upto(s0 - q * s1, k);
            r0 = r1;
            s0 = s1;
            r1 = std::move(r);
            s1 = std::move(s);
        }
    }

    // True if e reduces to zero; false if invertible; SplitSignal otherwise.
    bool zero_or_invertible(const Polynomial& e) const {
        const Polynomial r = reduce(e);
        if (r.is_zero()) return true;
        invert(r);
        return false;
    }

    // New tower with one more level.  The modulus must be monic of positive
    // degree in variable levels() and use no later variable.
    Tower extend(const Polynomial& modulus) const {
        const int K = levels();
        Polynomial m = reduce(set_arity(modulus, K + 1));
        const int D = m.degree_in(K);
        if (m.is_zero() || D < 1) throw PreconditionError("internal: tower modulus must have positive degree");
        if (!(coeff_at(m, K, D) == Polynomial::constant(K + 1, 1)))
            throw PreconditionError("internal: tower modulus must be monic");
        Tower t;
        t.mods_.reserve(K + 1);
        for (const Polynomial& p : mods_) t.mods_.push_back(set_arity(p, K + 1));
        t.mods_.push_back(std::move(m));
        t.degs_ = degs_;
        t.degs_.push_back(D);
        return t;
    }

    // Replace the modulus at `level` by each factor in turn, re-reducing the
    // moduli above it (their monic heads survive, since reduction never
    // touches the leading power of the main variable).
    std::pair<Tower, Tower> split(int level, const Polynomial& a, const Polynomial& b) const {
        auto rebuild = [&](const Polynomial& head) {
            Tower t;
            for (int k = 0; k < level; ++k) t = t.extend(mods_[k]);
            t = t.extend(head);
            for (int k = level + 1; k < levels(); ++k) t = t.extend(mods_[k]);
            return t;
        };
        return {rebuild(a), rebuild(b)};
    }

  private:
    std::vector<Polynomial> mods_;  // mods_[k]: arity levels(), variables <= k only, monic in k
    std::vector<int> degs_;
};

// Monic gcd in variable `var` by Euclid over the tower.
Polynomial gcd_monic(const Tower& R, Polynomial a, Polynomial b, int var) {
    a = R.reduce(a);
    b = R.reduce(b);
    while (!b.is_zero()) {
        const int db = b.degree_in(var);
        if (db == 0) {
            // Nonzero constant (possibly a zero divisor, which splits here).
            R.invert(b);
            return Polynomial::constant(a.nvars(), 1);
        }
        const Polynomial li = R.invert(coeff_at(b, var, db));
        b = R.reduce(li * b);
        Polynomial r = R.udivmod(a, b, var, db).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    const int da = a.degree_in(var);
    if (da == 0) return Polynomial::constant(a.nvars(), 1);
    const Polynomial li = R.invert(coeff_at(a, var, da));
    return R.reduce(li * a);
}

// Yun squarefree decomposition of a polynomial of positive degree in `var`:
// returns (monic factor, multiplicity) pairs with distinct roots.
std::vector<std::pair<Polynomial, int>> squarefree_parts(const Tower& R, Polynomial p, int var) {
    const int d = p.degree_in(var);
    const Polynomial li = R.invert(coeff_at(p, var, d));
    p = R.reduce(li * p);
    const Polynomial dp = R.reduce(p.derivative(var));
    Polynomial g = gcd_monic(R, p, dp, var);
    Polynomial c = R.udiv_exact(p, g, var, g.degree_in(var));
    Polynomial w = R.udiv_exact(dp, g, var, g.degree_in(var));
    std::vector<std::pair<Polynomial, int>> out;
    int i = 1;
    while (c.degree_in(var) > 0) {
        const Polynomial y = R.reduce(w - c.derivative(var));
        Polynomial z = gcd_monic(R, c, y, var);
        if (z.degree_in(var) > 0) out.push_back({z, i});
        c = R.udiv_exact(c, z, var, z.degree_in(var));
        w = R.udiv_exact(y, z, var, z.degree_in(var));
        ++i;
    }
    return out;
}

// Terms of f grouped by (x, y) exponent; values are tower elements at the
// tower's own arity.
std::map<std::pair<int, int>, Polynomial> decompose(const Polynomial& f, int K) {
    std::map<std::pair<int, int>, std::vector<Term>> buckets;
    for (const Term& t : f.terms()) {
        Exponents e(t.exp.begin(), t.exp.begin() + K);
        buckets[{t.exp[K], t.exp[K + 1]}].push_back({std::move(e), t.coeff});
    }
    std::map<std::pair<int, int>, Polynomial> out;
    for (auto& [ij, terms] : buckets) out.emplace(ij, Polynomial::from_terms(K, std::move(terms)));
    return out;
}

std::int64_t count_total(const Tower& R, const Polynomial& f, int depth, int max_depth);

std::int64_t count_core(const Tower& R, Polynomial f, int depth, int max_depth) {
    if (depth > max_depth) throw DepthExceededError("branch recursion exceeded the depth limit");
    const int K = R.levels();
    f = R.reduce(f);
    if (f.is_zero()) throw NonReducedError("germ vanishes over a field extension: repeated factor");
    auto groups = decompose(f, K);

    // Certify every coefficient invertible; zero divisors split the tower.
    for (const auto& [ij, c] : groups) R.invert(c);

    int a = groups.begin()->first.first;
    int b = groups.begin()->first.second;
    for (const auto& [ij, c] : groups) {
        a = std::min(a, ij.first);
        b = std::min(b, ij.second);
    }
    if (a > 1 || b > 1) throw NonReducedError("germ has a repeated coordinate-axis factor");
    std::int64_t count = 0;
    if (a == 1) count += R.dim();  // branch x = 0
    if (b == 1) count += R.dim();  // branch y = 0
    if (a > 0 || b > 0) {
        std::map<std::pair<int, int>, Polynomial> shifted;
        for (auto& [ij, c] : groups) shifted.emplace(std::make_pair(ij.first - a, ij.second - b), std::move(c));
        groups = std::move(shifted);
    }
    if (groups.count({0, 0})) return count;  // unit after stripping the axes

    // Lower Newton hull from the y-axis point to the x-axis point.
    std::map<int, int> jmin;
    for (const auto& [ij, c] : groups) {
        auto it = jmin.find(ij.first);
        if (it == jmin.end() || ij.second < it->second) jmin[ij.first] = ij.second;
    }
    std::vector<std::pair<int, int>> pts;
    for (const auto& [i, j] : jmin) {
        pts.push_back({i, j});
        if (j == 0) break;  // later points lie beyond the x-axis endpoint
    }
    std::vector<std::pair<int, int>> hull;
    auto cross = [](std::pair<int, int> o, std::pair<int, int> p, std::pair<int, int> q) {
        return static_cast<std::int64_t>(p.first - o.first) * (q.second - o.second) -
               static_cast<std::int64_t>(p.second - o.second) * (q.first - o.first);
    };
    for (const auto& p : pts) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }

    for (std::size_t e = 0; e + 1 < hull.size(); ++e) {
        const auto [i1, j1] = hull[e];
        const auto [i2, j2] = hull[e + 1];
        const int di = i2 - i1;
        const int dj = j1 - j2;
        const int g = std::gcd(di, dj);
        const int u = di / g;  // exponent step along the edge
        const int v = dj / g;  // ramification index of the edge
        const int L = g;

        // Edge polynomial in T (variable K), reversed so its roots are the
        // edge root parameters: psi(T) = sum_s c_{(i1+u s, j1-v s)} T^{L-s}.
        Polynomial psi = Polynomial::constant(K + 1, 0);
        for (int s = 0; s <= L; ++s) {
            auto it = groups.find({i1 + u * s, j1 - v * s});
            if (it == groups.end()) continue;
            psi += set_arity(it->second, K + 1) * xpow(K + 1, K, L - s);
        }

        for (auto& [fac, mult] : squarefree_parts(R, psi, K)) {
            if (mult == 1) {
                count += static_cast<std::int64_t>(fac.degree_in(K)) * R.dim();
                continue;
            }
            // Adjoin a root theta of the factor; if the edge is ramified
            // (v > 1), adjoin c with c^v = theta so the substitution
            // x = x'^v, y = x'^u (c + y') has coefficients in the tower.
            const Tower R1 = R.extend(fac);
            Tower RC;
            int cvar;
            if (v == 1) {
                RC = R1;
                cvar = K;
            } else {
                const Polynomial m2 = xpow(K + 2, K + 1, v) - xpow(K + 2, K, 1);
                RC = R1.extend(m2);
                cvar = K + 1;
            }
            const int K2 = RC.levels();
            const int xv = K2;
            const int yv = K2 + 1;
            const std::int64_t w = static_cast<std::int64_t>(v) * i1 + static_cast<std::int64_t>(u) * j1;
            const Polynomial cy = Polynomial::variable(K2 + 2, cvar) + Polynomial::variable(K2 + 2, yv);
            int jmax = 0;
            for (const auto& [ij, c] : groups) jmax = std::max(jmax, ij.second);
            std::vector<Polynomial> cyp{Polynomial::constant(K2 + 2, 1)};
            for (int j = 1; j <= jmax; ++j) cyp.push_back(RC.reduce(cyp.back() * cy));
            Polynomial fp = Polynomial::constant(K2 + 2, 0);
            for (const auto& [ij, c] : groups) {
                const std::int64_t ex = static_cast<std::int64_t>(v) * ij.first + static_cast<std::int64_t>(u) * ij.second - w;
                if (ex < 0) throw PreconditionError("internal: negative valuation in edge transform");
                fp += set_arity(c, K2 + 2) * cyp[ij.second] * xpow(K2 + 2, xv, static_cast<int>(ex));
            }
            const std::int64_t sub = count_total(RC, RC.reduce(fp), depth + 1, max_depth);
            if (sub % v != 0) throw InstabilityError("internal: branch total not divisible by the ramification index");
            count += sub / v;
        }
    }
    return count;
}

std::int64_t count_total(const Tower& R, const Polynomial& f, int depth, int max_depth) {
    try {
        return count_core(R, f, depth, max_depth);
    } catch (const SplitSignal& s) {
        auto [ta, tb] = R.split(s.level, s.a, s.b);
        return count_total(ta, ta.reduce(f), depth, max_depth) + count_total(tb, tb.reduce(f), depth, max_depth);
    }
}

}  // namespace

std::int64_t branch_count(const Polynomial& germ, Budget& budget, int max_depth) {
    if (germ.nvars() != 2) throw PreconditionError("branch count expects a germ in two variables");
    if (germ.is_zero()) throw PreconditionError("branch count expects a nonzero germ");
    if (germ.constant_coeff() != 0) throw PreconditionError("branch count expects a germ vanishing at the origin");
    if (!milnor_number(germ, budget).has_value())
        throw NonReducedError("germ has a repeated factor (Milnor number is infinite)");
    return count_total(Tower{}, germ, 0, max_depth);
}

}  // namespace milnor

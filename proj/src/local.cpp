#include "milnor/local.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "milnor/linalg.hpp"

namespace milnor {

namespace {

// Working representation: integer coefficients, primitive, terms sorted by the
// local order with the leading term first.  Total degrees are cached per term
// because the order compares them constantly.
struct WTerm {
    Exponents exp;
    mpz_class c;
    int deg;
};

int wcmp(const Exponents& a, int da, const Exponents& b, int db) {
    if (da != db) return da < db ? 1 : -1;  // smaller degree is locally larger
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    return 0;
}

struct WPoly {
    std::vector<WTerm> t;
    int max_deg = -1;

    bool zero() const { return t.empty(); }
    const WTerm& lead() const { return t.front(); }
    int ecart() const { return max_deg - t.front().deg; }

    void strip_content() {
        if (t.empty()) return;
        mpz_class g = 0;
        for (const auto& w : t) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w.c.get_mpz_t());
            if (g == 1) break;
        }
        bool flip = t.front().c < 0;
        if (g == 1 && !flip) return;
        if (flip) g = -g;
        for (auto& w : t) w.c /= g;
    }
};

// `cap` truncates the computation to the jet ring R/m^cap: terms of degree
// >= cap are dropped everywhere, which computes with the ideal I + m^cap.
constexpr int kNoCap = std::numeric_limits<int>::max();

WPoly to_work(const Polynomial& p, int cap = kNoCap) {
    WPoly w;
    if (p.is_zero()) return w;
    mpz_class den = 1;
    for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    w.t.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        if (total_degree(t.exp) >= cap) continue;
        mpz_class c = t.coeff.get_num() * (den / t.coeff.get_den());
        w.t.push_back({t.exp, std::move(c), total_degree(t.exp)});
    }
    std::sort(w.t.begin(), w.t.end(),
              [](const WTerm& a, const WTerm& b) { return wcmp(a.exp, a.deg, b.exp, b.deg) > 0; });
    w.max_deg = 0;
    for (const auto& t : w.t) w.max_deg = std::max(w.max_deg, t.deg);
    w.strip_content();
    return w;
}

Polynomial from_work(const WPoly& w, int nvars) {
    std::vector<Term> terms;
    terms.reserve(w.t.size());
    for (const auto& t : w.t) terms.push_back({t.exp, mpq_class(t.c)});
    return Polynomial::from_terms(nvars, std::move(terms));
}

// r := cr * a - cb * x^shift * b, merging the sorted term lists directly.
WPoly combine(const WPoly& a, const mpz_class& cr, const WPoly& b, const mpz_class& cb, const Exponents& shift,
              int shift_deg, int cap) {
    WPoly r;
    r.t.reserve(a.t.size() + b.t.size());
    std::size_t i = 0, j = 0;
    Exponents bexp;
    while (i < a.t.size() || j < b.t.size()) {
        int cmp;
        int bdeg = 0;
        if (j < b.t.size()) {
            bdeg = b.t[j].deg + shift_deg;
            if (bdeg >= cap) {  // shifted tail left the jet ring; drop the rest
                j = b.t.size();
                if (i == a.t.size()) break;
                bdeg = 0;
            } else {
                bexp = exp_add(b.t[j].exp, shift);
            }
        }
        if (i == a.t.size())
            cmp = -1;
        else if (j == b.t.size())
            cmp = 1;
        else
            cmp = wcmp(a.t[i].exp, a.t[i].deg, bexp, bdeg);
        if (cmp > 0) {
            r.t.push_back({a.t[i].exp, cr * a.t[i].c, a.t[i].deg});
            ++i;
        } else if (cmp < 0) {
            r.t.push_back({std::move(bexp), -cb * b.t[j].c, bdeg});
            ++j;
        } else {
            mpz_class c = cr * a.t[i].c - cb * b.t[j].c;
            if (c != 0) r.t.push_back({a.t[i].exp, std::move(c), a.t[i].deg});
            ++i, ++j;
        }
    }
    r.max_deg = 0;
    for (const auto& t : r.t) r.max_deg = std::max(r.max_deg, t.deg);
    r.strip_content();
    return r;
}

// One Mora reduction step: cancel the leading term of h against g.
WPoly reduce_lead(const WPoly& h, const WPoly& g, int cap) {
    mpz_class gamma;
    mpz_gcd(gamma.get_mpz_t(), h.lead().c.get_mpz_t(), g.lead().c.get_mpz_t());
    Exponents shift = exp_sub(h.lead().exp, g.lead().exp);
    return combine(h, g.lead().c / gamma, g, h.lead().c / gamma, shift, h.lead().deg - g.lead().deg, cap);
}

// Mora weak normal form with ecart selection.  `reducers` is seeded with the
// basis; intermediate results with smaller ecart than every divisor join it.
WPoly nf_mora(WPoly h, const std::deque<WPoly>& basis, const std::vector<std::size_t>& active, Budget& budget,
              int cap) {
    std::deque<WPoly> extra;
    while (!h.zero()) {
        const WPoly* best = nullptr;
        auto consider = [&](const WPoly& g) {
            if (!exp_divides(g.lead().exp, h.lead().exp)) return;
            if (!best || g.ecart() < best->ecart() ||
                (g.ecart() == best->ecart() && g.t.size() < best->t.size()))
                best = &g;
        };
        for (std::size_t idx : active) consider(basis[idx]);
        for (const auto& g : extra) consider(g);
        if (!best) break;
        if (best->ecart() > h.ecart()) {
            extra.push_back(h);  // h itself becomes a reducer (tangent cone trick)
            // deque keeps earlier references valid
        }
        budget.charge();
        h = reduce_lead(h, *best, cap);
    }
    return h;
}

WPoly spoly(const WPoly& f, const WPoly& g, int cap) {
    Exponents l = exp_lcm(f.lead().exp, g.lead().exp);
    int ldeg = total_degree(l);
    mpz_class gamma;
    mpz_gcd(gamma.get_mpz_t(), f.lead().c.get_mpz_t(), g.lead().c.get_mpz_t());
    // (lc g / gamma) * x^(l - lm f) * f  -  (lc f / gamma) * x^(l - lm g) * g
    WPoly sf;
    sf.t.reserve(f.t.size());
    Exponents shift_f = exp_sub(l, f.lead().exp);
    int sdeg = ldeg - f.lead().deg;
    for (const auto& t : f.t) {
        if (t.deg + sdeg >= cap) break;  // terms are sorted by ascending degree
        sf.t.push_back({exp_add(t.exp, shift_f), t.c, t.deg + sdeg});
    }
    sf.max_deg = 0;
    for (const auto& t : sf.t) sf.max_deg = std::max(sf.max_deg, t.deg);
    return combine(sf, g.lead().c / gamma, g, f.lead().c / gamma, exp_sub(l, g.lead().exp), ldeg - g.lead().deg,
                   cap);
}

struct Pair {
    std::size_t i, j;
    int lcm_deg;
};

}  // namespace

Exponents local_leading_exponent(const Polynomial& p) {
    if (p.is_zero()) throw PreconditionError("zero polynomial has no leading exponent");
    const Term* best = &p.terms().front();
    for (const auto& t : p.terms())
        if (local_compare(t.exp, best->exp) > 0) best = &t;
    return best->exp;
}

Polynomial mora_normal_form(const Polynomial& g, const std::vector<Polynomial>& gens, Budget& budget) {
    std::deque<WPoly> basis;
    std::vector<std::size_t> active;
    for (const auto& p : gens) {
        WPoly w = to_work(p);
        if (!w.zero()) {
            basis.push_back(std::move(w));
            active.push_back(basis.size() - 1);
        }
    }
    return from_work(nf_mora(to_work(g), basis, active, budget, kNoCap), g.nvars());
}

namespace {

StandardBasis sb_core(const std::vector<Polynomial>& gens, Budget& budget, int cap) {
    if (gens.empty()) throw PreconditionError("standard basis of an empty generator list");
    int nvars = gens.front().nvars();

    std::deque<WPoly> basis;
    std::vector<std::size_t> active;
    std::vector<Pair> pairs;
    auto enqueue = [&](std::size_t k) {
        for (std::size_t i : active) {
            if (i == k) continue;
            Exponents l = exp_lcm(basis[i].lead().exp, basis[k].lead().exp);
            int ldeg = total_degree(l);
            // an s-polynomial's terms all have degree >= the lcm degree, so
            // inside the jet ring such pairs reduce to zero outright
            if (ldeg >= cap) continue;
            pairs.push_back({std::min(i, k), std::max(i, k), ldeg});
        }
        active.push_back(k);
    };
    for (const auto& p : gens) {
        WPoly w = to_work(p, cap);
        if (!w.zero()) {
            basis.push_back(std::move(w));
            enqueue(basis.size() - 1);
        }
    }

    while (!pairs.empty()) {
        auto best = pairs.begin();
        for (auto it = pairs.begin(); it != pairs.end(); ++it)
            if (it->lcm_deg < best->lcm_deg ||
                (it->lcm_deg == best->lcm_deg && std::pair(it->i, it->j) < std::pair(best->i, best->j)))
                best = it;
        Pair p = *best;
        pairs.erase(best);
        WPoly r = nf_mora(spoly(basis[p.i], basis[p.j], cap), basis, active, budget, cap);
        if (!r.zero()) {
            basis.push_back(std::move(r));
            enqueue(basis.size() - 1);
        }
    }

    // Minimalize: drop elements whose leading monomial is divisible by the
    // leading monomial of another kept element.
    std::vector<std::size_t> keep;
    for (std::size_t i : active) {
        bool redundant = false;
        for (std::size_t j : active) {
            if (i == j) continue;
            const Exponents &li = basis[i].lead().exp, &lj = basis[j].lead().exp;
            if (exp_divides(lj, li) && (li != lj || j < i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) keep.push_back(i);
    }

    StandardBasis out;
    for (std::size_t i : keep) {
        out.elements.push_back(from_work(basis[i], nvars));
        out.leading.push_back(basis[i].lead().exp);
    }
    out.colength = monomial_colength(out.leading, nvars);
    return out;
}

// Colength of the monomial staircase inside the jet ring R/m^cap: the number
// of monomials of total degree < cap divisible by none of the leads, plus the
// largest degree of such a monomial.  When max_deg <= cap - 2 the staircase
// below the cap coincides with the staircase of the uncapped ideal (the
// highest-corner cut-off criterion), so the count is the true colength.
struct JetBox {
    std::int64_t count = 0;
    int max_deg = -1;
    bool closed(int cap) const { return max_deg <= cap - 2; }
};

JetBox jet_box(const std::vector<Exponents>& leading, int nvars, int cap) {
    JetBox box;
    Exponents m(nvars, 0);
    // depth-first over exponent vectors; prune as soon as a lead divides the
    // current prefix monomial (every extension is then divisible too)
    auto divisible = [&](const Exponents& e) {
        for (const auto& l : leading)
            if (exp_divides(l, e)) return true;
        return false;
    };
    auto rec = [&](auto&& self, int v, int deg) -> void {
        if (v == nvars) {
            ++box.count;
            box.max_deg = std::max(box.max_deg, deg);
            return;
        }
        for (int e = 0; deg + e < cap; ++e) {
            m[v] = e;
            if (e > 0 && divisible(m)) break;  // larger e stays divisible
            self(self, v + 1, deg + e);
        }
        m[v] = 0;
    };
    if (!divisible(m)) {
        // the zero monomial is checked once here; rec assumes prefix clean
        rec(rec, 0, 0);
    }
    return box;
}

}  // namespace

StandardBasis standard_basis(const std::vector<Polynomial>& gens, Budget& budget) {
    return sb_core(gens, budget, kNoCap);
}

std::optional<std::int64_t> monomial_colength(const std::vector<Exponents>& leading, int nvars) {
    for (const auto& e : leading)
        if (total_degree(e) == 0) return 0;  // unit ideal
    // finite colength iff every variable has a pure power among the leads
    Exponents box(nvars, -1);
    for (const auto& e : leading) {
        int nz = -1;
        bool pure = true;
        for (int v = 0; v < nvars; ++v) {
            if (e[v] == 0) continue;
            if (nz >= 0) {
                pure = false;
                break;
            }
            nz = v;
        }
        if (pure && nz >= 0 && (box[nz] < 0 || e[nz] < box[nz])) box[nz] = e[nz];
    }
    for (int v = 0; v < nvars; ++v)
        if (box[v] < 0) return std::nullopt;

    // Walk the box and count monomials not divisible by any leading monomial.
    std::int64_t count = 0;
    Exponents m(nvars, 0);
    for (;;) {
        bool inside = false;
        for (const auto& e : leading)
            if (exp_divides(e, m)) {
                inside = true;
                break;
            }
        if (!inside) ++count;
        int v = 0;
        while (v < nvars && m[v] == box[v] - 1) m[v++] = 0;
        if (v == nvars) break;
        ++m[v];
    }
    return count;
}

namespace {

// Gaussian elimination on the coefficient matrix of the generators, pivoting
// on the monomials shared by the most generators first.  Row operations are
// invertible linear combinations, so the generated ideal is unchanged, while
// low-rank dense blocks -- the shape the partial derivatives take after a
// linear form is substituted into a sparse germ -- cancel outright instead of
// being dragged through every standard-basis reduction.
std::vector<Polynomial> linear_interreduce(const std::vector<Polynomial>& gens) {
    if (gens.size() < 2) return gens;
    int nvars = gens.front().nvars();
    std::map<Exponents, int> share;
    for (const auto& g : gens)
        for (const auto& t : g.terms()) ++share[t.exp];
    std::vector<const Exponents*> cols;
    cols.reserve(share.size());
    for (const auto& entry : share) cols.push_back(&entry.first);
    std::stable_sort(cols.begin(), cols.end(), [&](const Exponents* a, const Exponents* b) {
        int ca = share.at(*a), cb = share.at(*b);
        if (ca != cb) return ca > cb;
        return local_compare(*a, *b) > 0;
    });
    QMatrix m(gens.size(), QRow(cols.size(), 0));
    for (std::size_t r = 0; r < gens.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) m[r][c] = gens[r].coeff(*cols[c]);
    reduced_row_echelon(m);
    std::vector<Polynomial> out;
    for (const auto& row : m) {
        std::vector<Term> ts;
        for (std::size_t c = 0; c < cols.size(); ++c)
            if (row[c] != 0) ts.push_back({*cols[c], row[c]});
        if (!ts.empty()) out.push_back(Polynomial::from_terms(nvars, std::move(ts)));
    }
    return out.empty() ? gens : out;
}

// Colength through jets of increasing order; exact once the staircase closes
// strictly below the cap.  The uncapped run remains the (always exact)
// fallback and the only path that can certify an infinite colength.
std::optional<std::int64_t> ideal_colength(const std::vector<Polynomial>& raw_gens, Budget& budget) {
    std::vector<Polynomial> gens = linear_interreduce(raw_gens);
    int nvars = gens.front().nvars();
    for (int cap = 8; cap <= 64; cap *= 2) {
        StandardBasis sb = sb_core(gens, budget, cap);
        JetBox box = jet_box(sb.leading, nvars, cap);
        if (box.closed(cap)) return box.count;
    }
    return sb_core(gens, budget, kNoCap).colength;
}

}  // namespace

std::optional<std::int64_t> milnor_number(const Polynomial& germ, Budget& budget) {
    if (germ.constant_coeff() != 0) throw PreconditionError("germ does not vanish at the origin");
    int n = germ.nvars();
    if (n == 0) throw PreconditionError("germ needs at least one variable");
    std::vector<Polynomial> jac;
    jac.reserve(n);
    for (int v = 0; v < n; ++v) jac.push_back(germ.derivative(v));
    return ideal_colength(jac, budget);
}

std::optional<std::int64_t> tjurina_number(const Polynomial& germ, Budget& budget) {
    if (germ.constant_coeff() != 0) throw PreconditionError("germ does not vanish at the origin");
    int n = germ.nvars();
    if (n == 0) throw PreconditionError("germ needs at least one variable");
    std::vector<Polynomial> gens;
    gens.reserve(n + 1);
    gens.push_back(germ);
    for (int v = 0; v < n; ++v) gens.push_back(germ.derivative(v));
    return ideal_colength(gens, budget);
}

int hessian_corank(const Polynomial& germ) {
    int n = germ.nvars();
    QMatrix h(n, QRow(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            mpq_class c = germ.derivative(i).derivative(j).constant_coeff();
            h[i][j] = c;
            h[j][i] = c;
        }
    return n - rank(h);
}

}  // namespace milnor

#include "milnor/poly.hpp"

#include <algorithm>
#include <map>

namespace milnor {

int total_degree(const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

int grlex_compare(const Exponents& a, const Exponents& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

int local_compare(const Exponents& a, const Exponents& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db ? 1 : -1;  // smaller degree is larger locally
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // last nonzero of a-b < 0 => a larger
    return 0;
}

bool exp_divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Exponents exp_add(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Exponents exp_lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& s, const Term& t) { return grlex_compare(s.exp, t.exp) > 0; });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().exp == t.exp)
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().coeff == 0) out.pop_back();
    }
    terms_ = std::move(out);
}

Polynomial Polynomial::constant(int nvars, const mpq_class& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.push_back({Exponents(nvars, 0), c});
    return p;
}

Polynomial Polynomial::variable(int nvars, int i) {
    Exponents e(nvars, 0);
    e.at(i) = 1;
    return monomial(nvars, std::move(e), 1);
}

Polynomial Polynomial::monomial(int nvars, Exponents e, const mpq_class& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.push_back({std::move(e), c});
    return p;
}

Polynomial Polynomial::from_terms(int nvars, std::vector<Term> terms) {
    Polynomial p(nvars);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.front().exp);  // grlex leader has max degree
}

int Polynomial::order() const {
    if (terms_.empty()) return -1;
    return total_degree(terms_.back().exp);
}

bool Polynomial::is_homogeneous() const { return degree() == order(); }

bool Polynomial::depends_on(int var) const {
    for (const auto& t : terms_)
        if (t.exp[var] > 0) return true;
    return false;
}

int Polynomial::degree_in(int var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.exp[var]);
    return d;
}

mpq_class Polynomial::coeff(const Exponents& e) const {
    for (const auto& t : terms_)
        if (t.exp == e) return t.coeff;
    return 0;
}

mpq_class Polynomial::constant_coeff() const {
    if (terms_.empty()) return 0;
    const Term& last = terms_.back();
    return total_degree(last.exp) == 0 ? last.coeff : mpq_class(0);
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

// Merge of two grlex-sorted term lists.
static std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        int cmp;
        if (i == a.size())
            cmp = -1;
        else if (j == b.size())
            cmp = 1;
        else
            cmp = grlex_compare(a[i].exp, b[j].exp);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back(b[j]);
            if (subtract) out.back().coeff = -out.back().coeff;
            ++j;
        } else {
            mpq_class c = subtract ? mpq_class(a[i].coeff - b[j].coeff) : mpq_class(a[i].coeff + b[j].coeff);
            if (c != 0) out.push_back({a[i].exp, std::move(c)});
            ++i, ++j;
        }
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    terms_ = merge_terms(terms_, o.terms_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    terms_ = merge_terms(terms_, o.terms_, true);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(a.nvars_);
    if (a.is_zero() || b.is_zero()) return r;
    std::map<Exponents, mpq_class> acc;
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_) acc[exp_add(s.exp, t.exp)] += s.coeff * t.coeff;
    r.terms_.reserve(acc.size());
    for (auto& [e, c] : acc)
        if (c != 0) r.terms_.push_back({e, std::move(c)});
    // map order is lex-ascending on exponents; resort into grlex order
    std::sort(r.terms_.begin(), r.terms_.end(),
              [](const Term& s, const Term& t) { return grlex_compare(s.exp, t.exp) > 0; });
    return r;
}

Polynomial& Polynomial::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw PreconditionError("negative polynomial power");
    Polynomial r = constant(nvars_, 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(nvars_);
    for (const auto& t : terms_) {
        if (t.exp[var] == 0) continue;
        Term d{t.exp, t.coeff * t.exp[var]};
        d.exp[var] -= 1;
        r.terms_.push_back(std::move(d));
    }
    // dropping one exponent preserves grlex relative order
    return r;
}

mpq_class Polynomial::evaluate(const std::vector<mpq_class>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw PreconditionError("evaluation point has wrong arity");
    // cache powers per variable
    std::vector<std::vector<mpq_class>> pw(nvars_, {mpq_class(1)});
    auto power = [&](int v, int e) -> const mpq_class& {
        auto& col = pw[v];
        while (static_cast<int>(col.size()) <= e) col.push_back(col.back() * point[v]);
        return col[e];
    };
    mpq_class s = 0;
    for (const auto& t : terms_) {
        mpq_class m = t.coeff;
        for (int v = 0; v < nvars_; ++v)
            if (t.exp[v]) m *= power(v, t.exp[v]);
        s += m;
    }
    return s;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (static_cast<int>(images.size()) != nvars_)
        throw PreconditionError("substitution image list has wrong arity");
    int out_vars = images.empty() ? 0 : images[0].nvars();
    for (const auto& g : images)
        if (g.nvars() != out_vars) throw PreconditionError("substitution images live in different rings");
    // cache powers of each image
    std::vector<std::vector<Polynomial>> pw(nvars_);
    for (int v = 0; v < nvars_; ++v) pw[v].push_back(Polynomial::constant(out_vars, 1));
    auto power = [&](int v, int e) -> const Polynomial& {
        auto& col = pw[v];
        while (static_cast<int>(col.size()) <= e) col.push_back(col.back() * images[v]);
        return col[e];
    };
    Polynomial r(out_vars);
    for (const auto& t : terms_) {
        Polynomial m = Polynomial::constant(out_vars, t.coeff);
        for (int v = 0; v < nvars_; ++v)
            if (t.exp[v]) m = m * power(v, t.exp[v]);
        r += m;
    }
    return r;
}

Polynomial Polynomial::extended(int new_nvars) const {
    if (new_nvars < nvars_) throw PreconditionError("extended() cannot shrink the ring");
    Polynomial r(new_nvars);
    for (const auto& t : terms_) {
        Exponents e = t.exp;
        e.resize(new_nvars, 0);
        r.terms_.push_back({std::move(e), t.coeff});
    }
    r.normalize();
    return r;
}

Polynomial Polynomial::shifted_up(int k) const {
    Polynomial r(nvars_ + k);
    for (const auto& t : terms_) {
        Exponents e(nvars_ + k, 0);
        std::copy(t.exp.begin(), t.exp.end(), e.begin() + k);
        r.terms_.push_back({std::move(e), t.coeff});
    }
    r.normalize();
    return r;
}

Polynomial Polynomial::dehomogenized(int var) const {
    Polynomial r(nvars_ - 1);
    for (const auto& t : terms_) {
        Exponents e;
        e.reserve(nvars_ - 1);
        for (int v = 0; v < nvars_; ++v)
            if (v != var) e.push_back(t.exp[v]);
        r.terms_.push_back({std::move(e), t.coeff});
    }
    r.normalize();
    return r;
}

Polynomial Polynomial::homogeneous_part(int d) const {
    Polynomial r(nvars_);
    for (const auto& t : terms_)
        if (total_degree(t.exp) == d) r.terms_.push_back(t);
    return r;
}

Polynomial Polynomial::primitive_part() const {
    if (terms_.empty()) return *this;
    mpz_class den = 1;
    for (const auto& t : terms_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
    mpz_class num = 0;
    for (const auto& t : terms_) {
        mpz_class v = t.coeff.get_num() * (den / t.coeff.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), v.get_mpz_t());
    }
    mpq_class scale(den, num);  // mpq_class(a, b) = a/b, canonicalized below
    scale.canonicalize();
    Polynomial r = *this * scale;
    if (r.terms_.front().coeff < 0) r *= mpq_class(-1);
    return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& b) const {
    if (b.is_zero()) throw PreconditionError("exact division by zero");
    Polynomial rem = *this;
    Polynomial quot(nvars_);
    const Term& lead_b = b.terms_.front();
    while (!rem.is_zero()) {
        const Term& lead_r = rem.terms_.front();
        if (!exp_divides(lead_b.exp, lead_r.exp))
            throw PreconditionError("exact polynomial division left a remainder");
        Polynomial t = Polynomial::monomial(nvars_, exp_sub(lead_r.exp, lead_b.exp), lead_r.coeff / lead_b.coeff);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

Polynomial substitute_linear(const Polynomial& p, const std::vector<std::vector<mpq_class>>& m) {
    if (static_cast<int>(m.size()) != p.nvars())
        throw PreconditionError("linear substitution matrix has wrong row count");
    int k = m.empty() ? 0 : static_cast<int>(m[0].size());
    std::vector<Polynomial> images;
    images.reserve(m.size());
    for (const auto& row : m) {
        if (static_cast<int>(row.size()) != k)
            throw PreconditionError("linear substitution matrix is ragged");
        Polynomial form(k);
        for (int j = 0; j < k; ++j)
            if (row[j] != 0) form += Polynomial::monomial(k, [&] { Exponents e(k, 0); e[j] = 1; return e; }(), row[j]);
        images.push_back(std::move(form));
    }
    return p.substitute(images);
}

LinearChange::LinearChange(std::vector<std::vector<mpq_class>> m) : m_(std::move(m)) {
    for (const auto& row : m_)
        if (row.size() != m_.size()) throw PreconditionError("linear change must be square");
}

LinearChange LinearChange::identity(int n) {
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return LinearChange(std::move(m));
}

LinearChange LinearChange::inverse() const {
    int n = size();
    auto a = m_;
    std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw PreconditionError("linear change is singular");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        mpq_class d = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            mpq_class f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return LinearChange(std::move(inv));
}

LinearChange LinearChange::compose(const LinearChange& inner) const {
    int n = size();
    if (inner.size() != n) throw PreconditionError("composed changes must have equal size");
    std::vector<std::vector<mpq_class>> m(n, std::vector<mpq_class>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) m[i][j] += m_[i][k] * inner.m_[k][j];
    return LinearChange(std::move(m));
}

Polynomial LinearChange::apply(const Polynomial& p) const { return substitute_linear(p, m_); }

}  // namespace milnor

#include "milnor/parse.hpp"

#include <cctype>
#include <sstream>

namespace milnor {

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    int nvars;

    Parser(const std::string& text, int nv) : s(text), nvars(nv) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

    mpz_class natural() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return mpz_class(s.substr(start, pos - start));
    }

    int var_index() {
        mpz_class idx = natural();
        if (!idx.fits_sint_p()) fail("variable index out of range");
        int i = static_cast<int>(idx.get_si());
        if (i >= nvars) fail("variable index " + std::to_string(i) + " exceeds ring arity " + std::to_string(nvars));
        return i;
    }

    Polynomial factor() {
        char c = peek();
        if (c == '(') {
            ++pos;
            Polynomial e = expr();
            if (!eat(')')) fail("expected ')'");
            if (eat('^')) {
                mpz_class k = natural();
                if (!k.fits_sint_p() || k < 0) fail("exponent out of range");
                return e.pow(static_cast<int>(k.get_si()));
            }
            return e;
        }
        if (c == 'z' || c == 'x') {
            ++pos;
            int i = var_index();
            int e = 1;
            if (eat('^')) {
                mpz_class k = natural();
                if (!k.fits_sint_p()) fail("exponent out of range");
                e = static_cast<int>(k.get_si());
            }
            Exponents ex(nvars, 0);
            ex[i] = e;
            return Polynomial::monomial(nvars, std::move(ex), 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            bool neg = eat('-');
            mpz_class num = natural();
            mpz_class den = 1;
            if (eat('/')) {
                den = natural();
                if (den == 0) fail("zero denominator");
            }
            mpq_class q(neg ? mpz_class(-num) : num, den);
            q.canonicalize();
            return Polynomial::constant(nvars, q);
        }
        fail("expected a coefficient, variable or '('");
    }

    Polynomial term() {
        Polynomial p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    Polynomial expr() {
        bool neg = false;
        if (peek() == '-') {
            ++pos;
            neg = true;
        }
        Polynomial p = term();
        if (neg) p = -p;
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos;
                p += term();
            } else if (c == '-') {
                ++pos;
                p -= term();
            } else {
                break;
            }
        }
        return p;
    }
};

// First pass when the arity is inferred: largest variable index + 1.
int scan_arity(const std::string& s) {
    int maxi = -1;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if ((s[i] == 'z' || s[i] == 'x') && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
            std::size_t j = i + 1;
            long v = 0;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])) && v < 1000000)
                v = v * 10 + (s[j++] - '0');
            maxi = std::max(maxi, static_cast<int>(v));
            i = j - 1;
        }
    }
    return maxi + 1;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, int nvars) {
    if (nvars < 0) nvars = scan_arity(text);
    Parser p(text, nvars);
    Polynomial r = p.expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

std::string to_string(const mpq_class& c) {
    std::ostringstream os;
    os << c;
    return os.str();
}

std::string to_string(const Polynomial& p, char var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        mpq_class c = t.coeff;
        if (first) {
            if (c < 0) {
                os << '-';
                c = -c;
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        bool constant_term = total_degree(t.exp) == 0;
        bool wrote = false;
        if (c != 1 || constant_term) {
            os << c;
            wrote = true;
        }
        for (int v = 0; v < p.nvars(); ++v) {
            if (t.exp[v] == 0) continue;
            if (wrote) os << '*';
            os << var << v;
            if (t.exp[v] > 1) os << '^' << t.exp[v];
            wrote = true;
        }
    }
    return os.str();
}

}  // namespace milnor

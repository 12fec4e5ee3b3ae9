#include "milnor/corpus.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "milnor/errors.hpp"
#include "milnor/parse.hpp"

namespace milnor {

namespace {

// Every record carries its complete singular locus (when isolated) together
// with expected local invariants, the expected polar degree, and structural
// flags.  The consistency relation sum(mu) + polar = (d-1)^n is enforced at
// load time for records with isolated singularities.
const char* const kBuiltinText = R"CORPUS(
name: smooth-quadric
vars: 3
degree: 2
poly: z0^2+z1^2+z2^2
polar: 1
irreducible: true
source: smooth quadric; the gradient map is linear

name: three-lines
vars: 3
degree: 3
poly: z0*z1*z2
point: 0,0,1 | A1 | mu=1 mult=2
point: 0,1,0 | A1 | mu=1 mult=2
point: 1,0,0 | A1 | mu=1 mult=2
polar: 1
factor1: z0
factor2: z1*z2
factor2_sing: 1,0,0
source: homaloidal plane curves (Dolgachev classification)

name: conic-with-tangent
vars: 3
degree: 3
poly: z0*(z1^2+z0*z2)
point: 0,0,1 | A3 | mu=3 mult=2
polar: 1
factor1: z0
factor2: z1^2+z0*z2
source: homaloidal plane curves (Dolgachev classification)

name: cubic-surface-e6
vars: 4
degree: 3
poly: z0*z1^2+z1*z2^2+z1*z3^2+z2^3
point: 1,0,0,0 | E6 | mu=6 mult=2 slice=2
polar: 2
source: normal cubic surface containing a single line

name: cubic-surface-a5a1
vars: 4
degree: 3
poly: z0*z1*z2+z0*z3^2+z1^3
point: 0,0,1,0 | A5 | mu=5 mult=2
point: 1,0,0,0 | A1 | mu=1 mult=2
polar: 2
source: normal cubic surface containing two lines

name: cubic-surface-3a2
vars: 4
degree: 3
poly: z0*z1*z2+z3^3
point: 1,0,0,0 | A2 | mu=2 mult=2
point: 0,1,0,0 | A2 | mu=2 mult=2
point: 0,0,1,0 | A2 | mu=2 mult=2
polar: 2
source: normal cubic surface containing three lines and three binodes

name: quintic-j24
vars: 3
degree: 5
poly: z0*(z1^2+z0*z2)*(z1^2+z0*z2+z0^2)
point: 0,0,1 | J2,4 | mu=14 mult=3 slice=2
polar: 2
source: two conics meeting at a single point and the common tangent

name: quartic-a7
vars: 3
degree: 4
poly: (z1^2+z0*z2)*(z1^2+z0*z2+z0^2)
point: 0,0,1 | A7 | mu=7 mult=2
polar: 2
source: two smooth conics meeting at a single point

name: quartic-d6a1
vars: 3
degree: 4
poly: z0*(z0+z1)*(z1^2+z0*z2)
point: 0,0,1 | D6 | mu=6 mult=3 slice=2
point: 1,-1,-1 | A1 | mu=1 mult=2
polar: 2
source: conic, a tangent, and a line through the tangency point

name: quartic-a1a3a3
vars: 3
degree: 4
poly: z0*z2*(z1^2+z0*z2)
point: 0,1,0 | A1 | mu=1 mult=2
point: 0,0,1 | A3 | mu=3 mult=2
point: 1,0,0 | A3 | mu=3 mult=2
polar: 2
factor1: z0*z2
factor1_sing: 0,1,0
factor2: z1^2+z0*z2
source: smooth conic and two tangent lines

name: quartic-d4-3a1
vars: 3
degree: 4
poly: z0*z1*z2*(z0+z1)
point: 0,0,1 | D4 | mu=4 mult=3 slice=2
point: 0,1,0 | A1 | mu=1 mult=2
point: 1,0,0 | A1 | mu=1 mult=2
point: 1,-1,0 | A1 | mu=1 mult=2
polar: 2
source: three concurrent lines and a line missing the center

name: quartic-e7
vars: 3
degree: 4
poly: z0*(z1^3+z0^2*z2)
point: 0,0,1 | E7 | mu=7 mult=3 slice=2
polar: 2
source: cuspidal cubic and its tangent at the cusp

name: quartic-a2a5
vars: 3
degree: 4
poly: z2*(z1^3+z0^2*z2)
point: 0,0,1 | A2 | mu=2 mult=2
point: 1,0,0 | A5 | mu=5 mult=2
polar: 2
source: cuspidal cubic and its tangent at the smooth flex

name: cuspidal-cubic
vars: 3
degree: 3
poly: z1^3+z0^2*z2
point: 0,0,1 | A2 | mu=2 mult=2
polar: 2
irreducible: true
source: cuspidal cubic

name: conic-with-secant
vars: 3
degree: 3
poly: z1*(z1^2+z0*z2)
point: 1,0,0 | A1 | mu=1 mult=2
point: 0,0,1 | A1 | mu=1 mult=2
polar: 2
source: smooth conic and a secant line

name: tight-n2-d3
vars: 3
degree: 3
poly: z0*z1^2+z1*z2^2
point: 1,0,0 | A3 | mu=3 mult=2 slice=1
polar: 1
source: one-singular-point family attaining the slice bound

name: tight-n2-d4
vars: 3
degree: 4
poly: z0*z1^3+z1*z2^3
point: 1,0,0 | E7 | mu=7 mult=3 slice=2
polar: 2
source: one-singular-point family attaining the slice bound

name: tight-n2-d5
vars: 3
degree: 5
poly: z0*z1^4+z1*z2^4
point: 1,0,0 | W13 | mu=13 mult=4 slice=3
polar: 3
source: one-singular-point family attaining the slice bound

name: tight-n3-d3
vars: 4
degree: 3
poly: z0*z1^2+z1*z2^2+z3^3
point: 1,0,0,0 | E6 | mu=6 mult=2 slice=2
polar: 2
source: one-singular-point family attaining the slice bound

name: tight-n3-d4
vars: 4
degree: 4
poly: z0*z1^3+z1*z2^3+z3^4
point: 1,0,0,0 | - | mu=21 mult=3 slice=6
polar: 6
source: one-singular-point family attaining the slice bound

name: tight-n3-d5
vars: 4
degree: 5
poly: z0*z1^4+z1*z2^4+z3^5
point: 1,0,0,0 | - | mu=52 mult=4 slice=12
polar: 12
source: one-singular-point family attaining the slice bound

name: tight-n4-d3
vars: 5
degree: 3
poly: z0*z1^2+z1*z2^2+z3^3+z4^3
point: 1,0,0,0,0 | - | mu=12 mult=2 slice=4
polar: 4
source: one-singular-point family attaining the slice bound

name: tight-n4-d4
vars: 5
degree: 4
poly: z0*z1^3+z1*z2^3+z3^4+z4^4
point: 1,0,0,0,0 | - | mu=63 mult=3 slice=18
polar: 18
source: one-singular-point family attaining the slice bound

name: tight-n4-d5
vars: 5
degree: 5
poly: z0*z1^4+z1*z2^4+z3^5+z4^5
point: 1,0,0,0,0 | - | mu=208 mult=4 slice=48
polar: 48
source: one-singular-point family attaining the slice bound

name: gordan-noether-d3
vars: 5
degree: 3
poly: z3^2*z0+z3*z4*z1+z4^2*z2
point: 1,0,0,0,0 | nonisolated | mu=inf mult=2
polar: 0
isolated: false
hessian_zero: true
source: Gordan-Noether threefold with identically vanishing Hessian

name: gordan-noether-d4
vars: 5
degree: 4
poly: z3^3*z0+z3^2*z4*z1+z4^3*z2
point: 1,0,0,0,0 | nonisolated | mu=inf mult=3
polar: 0
isolated: false
hessian_zero: true
source: Gordan-Noether threefold with identically vanishing Hessian

name: cone-over-cubic
vars: 4
degree: 3
poly: z1^3+z2^3+z3^3
point: 1,0,0,0 | apex | mu=8 mult=3 slice=4
polar: 0
cone: true
hessian_zero: true
source: cone over a smooth plane cubic

name: cubic-threefold-t266
vars: 5
degree: 3
poly: z0*z1*z4+z0^3+z1^3+z0*z2^2+z1*z3^2
point: 0,0,0,0,1 | T2,6,6 | mu=13 mult=2
polar: 3
source: cubic threefold of polar degree three

name: bitangent-conics
vars: 3
degree: 4
poly: z0^2*z1^2-z2^4
point: 1,0,0 | A3 | mu=3 mult=2
point: 0,1,0 | A3 | mu=3 mult=2
polar: 3
factor1: z0*z1-z2^2
factor2: z0*z1+z2^2
source: two smooth conics tangent at two points

name: quintic-e8a4
vars: 3
degree: 5
poly: z0^3*z1^2-z2^5
point: 0,1,0 | E8 | mu=8 mult=3 slice=2
point: 1,0,0 | A4 | mu=4 mult=2 slice=1
polar: 4
irreducible: true
source: irreducible quintic attaining the degree-branch bound
)CORPUS";

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string piece;
    while (std::getline(ss, piece, sep)) out.push_back(piece);
    return out;
}

long parse_long(const std::string& s, const std::string& context) {
    try {
        std::size_t pos = 0;
        long v = std::stol(trim(s), &pos);
        if (pos != trim(s).size()) throw std::invalid_argument("trailing");
        return v;
    } catch (const std::exception&) {
        throw ParseError("corpus: bad integer '" + s + "' in " + context, 0);
    }
}

bool parse_bool(const std::string& s, const std::string& context) {
    std::string t = trim(s);
    if (t == "true") return true;
    if (t == "false") return false;
    throw ParseError("corpus: bad boolean '" + s + "' in " + context, 0);
}

std::vector<long> parse_coords(const std::string& s, const std::string& context) {
    std::vector<long> coords;
    for (const std::string& c : split(s, ',')) coords.push_back(parse_long(c, context));
    return coords;
}

PointExpectation parse_point(const std::string& value, const std::string& record) {
    std::vector<std::string> parts = split(value, '|');
    if (parts.size() != 3)
        throw ParseError("corpus: point line needs 'coords | label | data' in " + record, 0);
    PointExpectation pe;
    pe.coords = parse_coords(trim(parts[0]), record);
    pe.label = trim(parts[1]);
    std::stringstream data(trim(parts[2]));
    std::string item;
    while (data >> item) {
        std::size_t eq = item.find('=');
        if (eq == std::string::npos)
            throw ParseError("corpus: point datum '" + item + "' is not key=value in " + record, 0);
        std::string key = item.substr(0, eq);
        std::string val = item.substr(eq + 1);
        if (key == "mu") {
            if (val == "inf")
                pe.mu = std::nullopt;
            else
                pe.mu = parse_long(val, record);
        } else if (key == "mult") {
            pe.mult = static_cast<int>(parse_long(val, record));
        } else if (key == "slice") {
            pe.mu_slice = parse_long(val, record);
        } else {
            throw ParseError("corpus: unknown point datum '" + key + "' in " + record, 0);
        }
    }
    return pe;
}

std::vector<std::vector<long>> parse_point_list(const std::string& value, const std::string& record) {
    std::vector<std::vector<long>> pts;
    std::stringstream ss(trim(value));
    std::string tuple;
    while (ss >> tuple) pts.push_back(parse_coords(tuple, record));
    return pts;
}

void validate(const CorpusRecord& rec) {
    Polynomial p = parse_polynomial(rec.poly_text, rec.nvars);
    if (!p.is_homogeneous() || p.degree() != rec.degree)
        throw PreconditionError("corpus record '" + rec.name + "': polynomial is not homogeneous of the stated degree");
    Hypersurface h(p);
    mpz_class expected_sum = 0;  // (d-1)^n
    mpz_pow_ui(expected_sum.get_mpz_t(), mpz_class(rec.degree - 1).get_mpz_t(),
               static_cast<unsigned long>(rec.n()));
    mpz_class mu_sum = rec.polar;
    for (const PointExpectation& pe : rec.points) {
        if (static_cast<int>(pe.coords.size()) != rec.nvars)
            throw PreconditionError("corpus record '" + rec.name + "': point arity mismatch");
        if (!h.contains(pe.point()))
            throw PreconditionError("corpus record '" + rec.name + "': listed point is not on the hypersurface");
        if (pe.mu) mu_sum += *pe.mu;
        if (!pe.mu && rec.isolated)
            throw PreconditionError("corpus record '" + rec.name + "': infinite mu on a record marked isolated");
    }
    if (rec.isolated && mu_sum != expected_sum)
        throw PreconditionError("corpus record '" + rec.name + "': sum(mu) + polar != (d-1)^n");
    if (rec.factors) {
        Polynomial f1 = parse_polynomial(rec.factors->first.text, rec.nvars);
        Polynomial f2 = parse_polynomial(rec.factors->second.text, rec.nvars);
        if (!(f1 * f2 == p))
            throw PreconditionError("corpus record '" + rec.name + "': recorded factors do not multiply to the polynomial");
    }
}

}  // namespace

Hypersurface CorpusRecord::hypersurface() const {
    return Hypersurface(parse_polynomial(poly_text, nvars));
}

std::vector<CorpusRecord> parse_corpus(const std::string& text) {
    std::vector<CorpusRecord> out;
    CorpusRecord rec;
    FactorSpec f1, f2;
    bool open = false;
    auto flush = [&]() {
        if (!open) return;
        if (rec.name.empty() || rec.nvars < 2 || rec.degree < 1 || rec.poly_text.empty())
            throw ParseError("corpus: record '" + rec.name + "' is missing name/vars/degree/poly", 0);
        if (!f1.text.empty() != !f2.text.empty())
            throw ParseError("corpus: record '" + rec.name + "' has only one factor", 0);
        if (!f1.text.empty()) rec.factors = std::make_pair(f1, f2);
        out.push_back(rec);
        rec = CorpusRecord{};
        f1 = FactorSpec{};
        f2 = FactorSpec{};
        open = false;
    };
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        line = trim(line);
        if (line.empty()) {
            flush();
            continue;
        }
        if (line[0] == '#') continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("corpus: line without ':' — '" + line + "'", 0);
        std::string key = trim(line.substr(0, colon));
        std::string value = trim(line.substr(colon + 1));
        open = true;
        if (key == "name") rec.name = value;
        else if (key == "vars") rec.nvars = static_cast<int>(parse_long(value, rec.name));
        else if (key == "degree") rec.degree = static_cast<int>(parse_long(value, rec.name));
        else if (key == "poly") rec.poly_text = value;
        else if (key == "point") rec.points.push_back(parse_point(value, rec.name));
        else if (key == "polar") rec.polar = parse_long(value, rec.name);
        else if (key == "irreducible") rec.irreducible = parse_bool(value, rec.name);
        else if (key == "cone") rec.is_cone = parse_bool(value, rec.name);
        else if (key == "isolated") rec.isolated = parse_bool(value, rec.name);
        else if (key == "hessian_zero") rec.hessian_zero = parse_bool(value, rec.name);
        else if (key == "factor1") f1.text = value;
        else if (key == "factor1_sing") f1.singular = parse_point_list(value, rec.name);
        else if (key == "factor2") f2.text = value;
        else if (key == "factor2_sing") f2.singular = parse_point_list(value, rec.name);
        else if (key == "source") rec.source = value;
        else throw ParseError("corpus: unknown key '" + key + "'", 0);
    }
    flush();
    for (const CorpusRecord& r : out) validate(r);
    return out;
}

std::string to_text(const CorpusRecord& rec) {
    std::ostringstream os;
    os << "name: " << rec.name << "\n";
    os << "vars: " << rec.nvars << "\n";
    os << "degree: " << rec.degree << "\n";
    os << "poly: " << rec.poly_text << "\n";
    for (const PointExpectation& pe : rec.points) {
        os << "point: ";
        for (std::size_t i = 0; i < pe.coords.size(); ++i)
            os << (i ? "," : "") << pe.coords[i];
        os << " | " << pe.label << " | mu=";
        if (pe.mu)
            os << *pe.mu;
        else
            os << "inf";
        if (pe.mult) os << " mult=" << *pe.mult;
        if (pe.mu_slice) os << " slice=" << *pe.mu_slice;
        os << "\n";
    }
    os << "polar: " << rec.polar << "\n";
    if (rec.irreducible) os << "irreducible: true\n";
    if (rec.is_cone) os << "cone: true\n";
    if (!rec.isolated) os << "isolated: false\n";
    if (rec.hessian_zero) os << "hessian_zero: true\n";
    if (rec.factors) {
        auto emit = [&os](const char* key, const FactorSpec& f) {
            os << key << ": " << f.text << "\n";
            if (!f.singular.empty()) {
                os << key << "_sing:";
                for (const std::vector<long>& pt : f.singular) {
                    os << " ";
                    for (std::size_t i = 0; i < pt.size(); ++i)
                        os << (i ? "," : "") << pt[i];
                }
                os << "\n";
            }
        };
        emit("factor1", rec.factors->first);
        emit("factor2", rec.factors->second);
    }
    if (!rec.source.empty()) os << "source: " << rec.source << "\n";
    return os.str();
}

std::string to_text(const std::vector<CorpusRecord>& corpus) {
    std::string out;
    for (const CorpusRecord& rec : corpus) {
        if (!out.empty()) out += "\n";
        out += to_text(rec);
    }
    return out;
}

const std::vector<CorpusRecord>& builtin_corpus() {
    static const std::vector<CorpusRecord> corpus = parse_corpus(kBuiltinText);
    return corpus;
}

const CorpusRecord& find_record(const std::string& name) {
    for (const CorpusRecord& rec : builtin_corpus())
        if (rec.name == name) return rec;
    throw PreconditionError("no corpus record named '" + name + "'");
}

}  // namespace milnor

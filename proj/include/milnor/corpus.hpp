#pragma once

// Built-in corpus of hypersurfaces with known invariants, plus a text format
// so users can audit the ground truth or supply their own records.  Each
// record stores the defining polynomial as text in the expression grammar,
// the complete list of singular points with expected local data, the expected
// polar degree, and structural flags.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "milnor/projective.hpp"

namespace milnor {

struct PointExpectation {
    std::vector<long> coords;
    std::string label;                    // singularity annotation, e.g. "A3", "E6", "J2,4"
    std::optional<std::int64_t> mu;       // expected Milnor number; nullopt = infinite
    std::optional<int> mult;              // expected multiplicity, when recorded
    std::optional<std::int64_t> mu_slice; // expected mu^(n-1), when recorded

    ProjectivePoint point() const { return ProjectivePoint::from_ints(coords); }
};

struct FactorSpec {
    std::string text;                          // defining polynomial of the factor
    std::vector<std::vector<long>> singular;   // its complete singular locus
};

struct CorpusRecord {
    std::string name;
    int nvars = 0;
    std::string poly_text;
    int degree = 0;
    std::vector<PointExpectation> points;  // the complete singular locus when isolated
    std::int64_t polar = 0;
    bool irreducible = false;
    bool is_cone = false;
    bool isolated = true;      // all singular points isolated (and listed)
    bool hessian_zero = false; // det Hess(h) vanishes identically
    std::optional<std::pair<FactorSpec, FactorSpec>> factors;  // recorded factorization h = f1 * f2
    std::string source;

    int n() const { return nvars - 1; }
    Hypersurface hypersurface() const;
};

// The embedded corpus.  Parsed and structurally validated on first use:
// stated degree and arity match the polynomial, listed points lie on the
// hypersurface, and sum(mu) + polar = (d-1)^n for records with isolated
// singularities.
const std::vector<CorpusRecord>& builtin_corpus();

const CorpusRecord& find_record(const std::string& name);

// Text format: records separated by blank lines, one "key: value" per line.
// Keys: name, vars, degree, poly, point (repeatable,
// "c0,c1,... | label | mu=N|inf [mult=N] [slice=N]"), polar, irreducible,
// cone, isolated, hessian_zero, factor1, factor1_sing (space-separated
// coordinate tuples), factor2, factor2_sing, source.  Lines starting with '#'
// are comments.
std::string to_text(const CorpusRecord& rec);
std::string to_text(const std::vector<CorpusRecord>& corpus);
std::vector<CorpusRecord> parse_corpus(const std::string& text);

}  // namespace milnor

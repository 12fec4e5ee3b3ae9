// The builtin corpus and its text format: structural invariants, round
// trips, load-time validation, and the verification driver on cheap records.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "milnor/corpus.hpp"
#include "milnor/parse.hpp"
#include "milnor/verify.hpp"

using namespace milnor;

TEST_CASE("builtin corpus loads with the promised coverage") {
    const auto& corpus = builtin_corpus();
    CHECK(corpus.size() == 30);

    std::set<std::string> names;
    for (const auto& rec : corpus) names.insert(rec.name);
    CHECK(names.size() == corpus.size());  // unique names

    // spot-check required families
    for (const char* name :
         {"smooth-quadric", "three-lines", "conic-with-tangent",       // polar degree 1
          "cuspidal-cubic", "quintic-j24", "cubic-surface-e6",         // polar degree 2
          "cubic-threefold-t266",                                      // polar degree 3
          "tight-n2-d3", "tight-n3-d4", "tight-n4-d5",                 // equality grid
          "gordan-noether-d3", "gordan-noether-d4", "cone-over-cubic"})
        CHECK(names.count(name) == 1);
}

TEST_CASE("find_record") {
    CHECK(find_record("three-lines").degree == 3);
    CHECK_THROWS_AS(find_record("no-such-record"), PreconditionError);
}

TEST_CASE("every record is documented and well-formed") {
    for (const auto& rec : builtin_corpus()) {
        CAPTURE(rec.name);
        CHECK(!rec.source.empty());
        Polynomial h = parse_polynomial(rec.poly_text, rec.nvars);
        CHECK(h.is_homogeneous());
        CHECK(h.degree() == rec.degree);
        Hypersurface hs = rec.hypersurface();
        for (const auto& p : rec.points) CHECK(hs.contains(p.point()));
    }
}

TEST_CASE("the defect formula ties stored mu values to the stored polar degree") {
    for (const auto& rec : builtin_corpus()) {
        if (!rec.isolated) continue;
        CAPTURE(rec.name);
        std::int64_t total = 0;
        for (const auto& p : rec.points) {
            REQUIRE(p.mu.has_value());
            total += *p.mu;
        }
        std::int64_t expected = 1;
        for (int i = 0; i < rec.n(); ++i) expected *= rec.degree - 1;
        CHECK(total + rec.polar == expected);
    }
}

TEST_CASE("the twelve polar-degree-two records carry matching labels") {
    const char* names[] = {"cubic-surface-e6", "cubic-surface-a5a1", "cubic-surface-3a2",
                           "quintic-j24",      "quartic-a7",         "quartic-d6a1",
                           "quartic-a1a3a3",   "quartic-d4-3a1",     "quartic-e7",
                           "quartic-a2a5",     "cuspidal-cubic",     "conic-with-secant"};
    for (const char* name : names) {
        const CorpusRecord& rec = find_record(name);
        CAPTURE(rec.name);
        CHECK(rec.polar == 2);
        for (const auto& p : rec.points) CHECK(!p.label.empty());
    }
}

TEST_CASE("corpus text round-trips exactly") {
    const auto& corpus = builtin_corpus();
    std::string text = to_text(corpus);
    std::vector<CorpusRecord> parsed = parse_corpus(text);
    REQUIRE(parsed.size() == corpus.size());
    CHECK(to_text(parsed) == text);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        CHECK(parsed[i].name == corpus[i].name);
        CHECK(parsed[i].poly_text == corpus[i].poly_text);
        CHECK(parsed[i].polar == corpus[i].polar);
        CHECK(parsed[i].points.size() == corpus[i].points.size());
        CHECK(parsed[i].factors.has_value() == corpus[i].factors.has_value());
    }
}

TEST_CASE("single-record export parses back") {
    const CorpusRecord& rec = find_record("cubic-threefold-t266");
    std::vector<CorpusRecord> parsed = parse_corpus(to_text(rec));
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0].name == rec.name);
    CHECK(parsed[0].points.size() == rec.points.size());
    CHECK(parsed[0].points[0].mu == rec.points[0].mu);
    CHECK(parsed[0].points[0].mult == rec.points[0].mult);
}

TEST_CASE("load-time validation rejects inconsistent records") {
    std::string good = to_text(find_record("three-lines"));

    // malformed key
    CHECK_THROWS_AS(parse_corpus("name: x\nbogus-key: 1\n"), ParseError);

    // wrong degree
    std::string bad = good;
    bad.replace(bad.find("degree: 3"), 9, "degree: 4");
    CHECK_THROWS_AS(parse_corpus(bad), PreconditionError);

    // point off the hypersurface
    bad = good;
    bad.replace(bad.find("point: 0,0,1"), 12, "point: 1,1,1");
    CHECK_THROWS_AS(parse_corpus(bad), PreconditionError);

    // defect formula violated
    bad = good;
    bad.replace(bad.find("polar: 1"), 8, "polar: 2");
    CHECK_THROWS_AS(parse_corpus(bad), PreconditionError);

    // comments and blank lines are fine
    CHECK(parse_corpus("# just a comment\n\n" + good + "\n\n").size() == 1);
}

TEST_CASE("verification driver passes on cheap records") {
    for (const char* name : {"smooth-quadric", "three-lines", "cuspidal-cubic", "tight-n2-d3"}) {
        RecordReport rep = verify_record(find_record(name), 42);
        CAPTURE(rep.record);
        for (const auto& c : rep.checks) {
            CAPTURE(c.name);
            CAPTURE(c.detail);
            CHECK(c.passed);
        }
        CHECK(rep.all_passed());
        CHECK(!rep.checks.empty());
    }
}

TEST_CASE("verification reports are deterministic given the seed") {
    RecordReport a = verify_record(find_record("conic-with-tangent"), 7);
    RecordReport b = verify_record(find_record("conic-with-tangent"), 7);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].name == b.checks[i].name);
        CHECK(a.checks[i].passed == b.checks[i].passed);
        CHECK(a.checks[i].detail == b.checks[i].detail);
    }
}

TEST_CASE("verify_all aggregates and respects record order") {
    std::vector<CorpusRecord> subset = {find_record("three-lines"), find_record("smooth-quadric")};
    VerificationReport rep = verify_all(subset, 42);
    REQUIRE(rep.records.size() == 2);
    CHECK(rep.records[0].record == "three-lines");
    CHECK(rep.records[1].record == "smooth-quadric");
    CHECK(rep.all_passed());
    CHECK(rep.failure_count() == 0);
    CHECK(rep.check_count() > 0);
}

TEST_CASE("a failing expectation is reported, not hidden") {
    CorpusRecord rec = find_record("cuspidal-cubic");
    rec.points.at(0).mu = 3;      // wrong on purpose (true value 2)
    rec.polar = 1;                // keep the load-time defect formula satisfied
    RecordReport rep = verify_record(rec, 42);
    CHECK(!rep.all_passed());
    bool mu_failed = false;
    for (const auto& c : rep.checks)
        if (c.name.rfind("milnor", 0) == 0 && !c.passed) mu_failed = true;
    CHECK(mu_failed);
}

// Coarse classification from the sectional Milnor sequence, cross-checked
// against the Hessian corank.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "milnor/classify.hpp"
#include "milnor/corpus.hpp"
#include "milnor/parse.hpp"

using namespace milnor;

namespace {

Classification classify(const std::string& germ) {
    Budget b{10'000'000, 0};
    return classify_germ(parse_polynomial(germ), 42, 5, b);
}

}  // namespace

TEST_CASE("class names") {
    CHECK(to_string(CoarseClass::Smooth) == "smooth");
    CHECK(to_string(CoarseClass::AType) == "A-type");
    CHECK(to_string(CoarseClass::CorankTwoFamily) == "corank-two");
    CHECK(to_string(CoarseClass::Other) == "other");
}

TEST_CASE("smooth germs") {
    Classification c = classify("x0 + x1^2");
    CHECK(c.cls == CoarseClass::Smooth);
    CHECK(c.k == 0);
    CHECK(c.mu_sequence.back() == 0);
}

TEST_CASE("A-type germs: k equals the Milnor number") {
    Classification a1 = classify("x0^2 + x1^2");
    CHECK(a1.cls == CoarseClass::AType);
    CHECK(a1.k == 1);
    CHECK(a1.corank == 0);

    Classification a2 = classify("x0^2 + x1^3");
    CHECK(a2.cls == CoarseClass::AType);
    CHECK(a2.k == 2);
    CHECK(a2.corank == 1);

    Classification a7 = classify("x0^2 + x1^8");
    CHECK(a7.cls == CoarseClass::AType);
    CHECK(a7.k == 7);

    Classification a4 = classify("x0^2 + x1^2 + x2^5");
    CHECK(a4.cls == CoarseClass::AType);
    CHECK(a4.k == 4);
    CHECK(a4.corank == 1);
}

TEST_CASE("corank-two family: generic slice is a cusp") {
    for (const char* text : {"x0^3 - x0*x1^2", "x0^2*x1 + x1^5", "x0^3 + x1^4", "x0^3 + x0*x1^3",
                             "x0^3 + x1^5"}) {
        Classification c = classify(text);
        CHECK(c.cls == CoarseClass::CorankTwoFamily);
        CHECK(c.corank == 2);
        CHECK(c.k == 0);
        CHECK(c.mu_sequence[1] == 2);
    }
}

TEST_CASE("beyond the two families") {
    // ordinary triple point of a surface: the generic plane slice is an
    // ordinary triple curve point with mu = 4, not a cusp
    Classification c = classify("x0^3 + x1^3 + x2^3");
    CHECK(c.cls == CoarseClass::Other);
    CHECK(c.mu_sequence == std::vector<std::int64_t>{1, 2, 4, 8});
    CHECK(c.corank == 3);

    // T-singularity of the cubic threefold: generic 3-fold slice has mu = 3
    Classification t = classify("x0*x1 + x0^3 + x1^3 + x0*x2^2 + x1*x3^2");
    CHECK(t.cls == CoarseClass::Other);
    CHECK(t.mu_sequence == std::vector<std::int64_t>{1, 1, 1, 3, 13});
    CHECK(t.corank == 2);
}

TEST_CASE("classification at hypersurface points") {
    const CorpusRecord& cusp = find_record("cuspidal-cubic");
    Budget b{10'000'000, 0};
    Classification c = classify_point(cusp.hypersurface(), cusp.points.at(0).point(), 42, 5, b);
    CHECK(c.cls == CoarseClass::AType);
    CHECK(c.k == 2);

    const CorpusRecord& j24 = find_record("quintic-j24");
    Budget b2{10'000'000, 0};
    Classification j = classify_point(j24.hypersurface(), j24.points.at(0).point(), 42, 5, b2);
    CHECK(j.cls == CoarseClass::CorankTwoFamily);
    CHECK(j.mu_sequence.back() == 14);

    const CorpusRecord& lines = find_record("three-lines");
    Budget b3;
    Classification s = classify_point(lines.hypersurface(), ProjectivePoint::from_ints({1, 1, 0}), 42, 5, b3);
    CHECK(s.cls == CoarseClass::Smooth);
}

TEST_CASE("non-isolated germs are rejected") {
    Budget b;
    CHECK_THROWS_AS(classify_germ(parse_polynomial("x0^2*x1^2"), 42, 3, b), NonIsolatedError);
}

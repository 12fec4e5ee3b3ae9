// Projective layer: points, germs at points, multiplicities, apex spaces,
// sectional Milnor sequences, polar degrees, Hessian vanishing, and the
// degree-bound report.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "milnor/corpus.hpp"
#include "milnor/parse.hpp"
#include "milnor/projective.hpp"

using namespace milnor;

namespace {

Polynomial P(const std::string& text, int nvars = -1) { return parse_polynomial(text, nvars); }

Hypersurface H(const std::string& text) { return Hypersurface(P(text)); }

ProjectivePoint pt(std::vector<long> c) { return ProjectivePoint::from_ints(c); }

std::vector<std::int64_t> seq_of(const std::string& germ, std::uint64_t seed = 42) {
    Budget b{10'000'000, 0};
    return germ_sectional_sequence(P(germ), seed, 5, b);
}

}  // namespace

TEST_CASE("projective points are canonical") {
    CHECK(pt({0, 0, 2}) == pt({0, 0, 1}));
    CHECK(pt({2, 4, 6}) == pt({1, 2, 3}));
    CHECK(pt({0, -1, 3}) == pt({0, 1, -3}));  // first nonzero entry positive
    CHECK(pt({0, 1, 0}).str() == "0:1:0");
    CHECK(pt({-2, 2, 4}).str() == "1:-1:-2");
    CHECK_THROWS_AS(pt({0, 0, 0}), PreconditionError);
}

TEST_CASE("hypersurface constructor validates its input") {
    CHECK_THROWS_AS(H("x0^2 + x1"), PreconditionError);       // inhomogeneous
    CHECK_THROWS_AS(H("x0 + x1"), PreconditionError);         // fewer than 3 variables
    CHECK_THROWS_AS(Hypersurface(Polynomial(3)), PreconditionError);  // zero
    Hypersurface h = H("x0*x1*x2");
    CHECK(h.n() == 2);
    CHECK(h.degree() == 3);
    CHECK(h.contains(pt({0, 0, 1})));
    CHECK(!h.contains(pt({1, 1, 1})));
}

TEST_CASE("germ at a point: chart coordinates, order, and validation") {
    Hypersurface h = H("x0*x1*x2");
    Polynomial g = germ_at(h, pt({0, 0, 1}));
    CHECK(g.nvars() == 2);
    CHECK(g.constant_coeff() == 0);
    CHECK(g.order() == 2);  // node
    CHECK(multiplicity(h, pt({0, 0, 1})) == 2);
    CHECK(multiplicity(h, pt({1, 1, 0})) == 1);  // smooth point
    CHECK_THROWS_AS(germ_at(h, pt({1, 1, 1})), PreconditionError);  // off the surface
}

TEST_CASE("multiplicity at recorded corpus points") {
    const CorpusRecord& tight = find_record("tight-n4-d5");
    Hypersurface h = tight.hypersurface();
    CHECK(multiplicity(h, tight.points.at(0).point()) == 4);

    const CorpusRecord& t266 = find_record("cubic-threefold-t266");
    CHECK(multiplicity(t266.hypersurface(), t266.points.at(0).point()) == 2);
}

TEST_CASE("apex space: cones vs non-cones") {
    // cone in P^3 over a smooth plane cubic
    ApexSpace apex = apex_space(H("x0^3 + x1^3 + x2^3"));
    CHECK(apex.dim() == 0);  // in P^2 the Fermat cubic is not a cone

    ApexSpace cone = apex_space(Hypersurface(P("x0^3 + x1^3 + x2^3", 4)));
    CHECK(cone.dim() == 1);
    CHECK(cone.is_cone());
    CHECK(cone.contains(pt({0, 0, 0, 1})));

    const CorpusRecord& gn = find_record("gordan-noether-d4");
    CHECK(apex_space(gn.hypersurface()).dim() == 0);
}

TEST_CASE("sectional sequences of model germs") {
    CHECK(seq_of("x0^2 + x1^6") == std::vector<std::int64_t>{1, 1, 5});          // A5
    CHECK(seq_of("x0^2 + x1^2 + x2^4") == std::vector<std::int64_t>{1, 1, 1, 3});  // A3
    CHECK(seq_of("x0^3 + x1^3 + x2^3") == std::vector<std::int64_t>{1, 2, 4, 8});  // cone germ
    CHECK(seq_of("x0^2 + x0*x1^2 + x2^3") == std::vector<std::int64_t>{1, 1, 2, 6});
}

TEST_CASE("sectional sequence at a hypersurface point") {
    const CorpusRecord& rec = find_record("tight-n3-d3");
    Budget b{10'000'000, 0};
    auto seq = sectional_milnor_sequence(rec.hypersurface(), rec.points.at(0).point(), 42, 5, b);
    CHECK(seq == std::vector<std::int64_t>{1, 1, 2, 6});
}

TEST_CASE("sequences are reproducible and seed-independent in value") {
    auto a = seq_of("x0^3 - x0*x1^2", 1);
    auto b = seq_of("x0^3 - x0*x1^2", 2);
    CHECK(a == b);  // generic slices: any seed reaches the same minimum
    CHECK(a == std::vector<std::int64_t>{1, 2, 4});
}

TEST_CASE("sectional sequence rejects non-isolated germs") {
    Budget b;
    Polynomial f = P("x0^2*x1^2");
    CHECK_THROWS_AS(germ_sectional_sequence(f, 42, 3, b), NonIsolatedError);
}

TEST_CASE("polar degree from the complete singular locus") {
    Budget b;
    CHECK(polar_degree(H("x0*x1*x2"), {pt({0, 0, 1}), pt({0, 1, 0}), pt({1, 0, 0})}, b) == 1);
    CHECK(polar_degree(H("x0^2 + x1^2 + x2^2"), {}, b) == 1);
    CHECK(polar_degree(H("x1^2*x2 - x0^3"), {pt({0, 0, 1})}, b) == 2);

    CHECK_THROWS_AS(polar_degree(H("x0*x1*x2"), {pt({0, 0, 1}), pt({0, 0, 1})}, b),
                    PreconditionError);  // duplicate point
    CHECK_THROWS_AS(polar_degree(H("x0*x1*x2"), {pt({1, 1, 0})}, b),
                    PreconditionError);  // not singular
}

TEST_CASE("polar degree flags non-isolated records") {
    const CorpusRecord& gn = find_record("gordan-noether-d3");
    Budget b;
    CHECK_THROWS_AS(polar_degree(gn.hypersurface(), {gn.points.at(0).point()}, b), NonIsolatedError);
}

TEST_CASE("Hessian determinant vanishing") {
    HessianVerdict fermat = hessian_vanishes(H("x0^3 + x1^3 + x2^3"), 42);
    CHECK(!fermat.vanishes);
    CHECK(fermat.certain);  // one nonzero evaluation is a certificate

    const CorpusRecord& gn = find_record("gordan-noether-d4");
    HessianVerdict v = hessian_vanishes(gn.hypersurface(), 42);
    CHECK(v.vanishes);
    CHECK(!v.certain);
    CHECK(v.samples == 8);
    CHECK(v.failure_bound > 0);
    CHECK(v.failure_bound < mpq_class(1, 1000));
}

TEST_CASE("degree-bound report on a tight record") {
    const CorpusRecord& rec = find_record("tight-n3-d4");
    Budget b{10'000'000, 0};
    std::vector<ProjectivePoint> pts;
    for (const auto& p : rec.points) pts.push_back(p.point());
    BoundsReport rep = degree_bounds_report(rec.hypersurface(), pts, 42, 5, b);
    CHECK(rep.polar == rec.polar);
    REQUIRE(rep.points.size() == 1);
    const PointBounds& pb = rep.points.front();
    CHECK(pb.mult_bound_ok);
    CHECK(pb.sectional_bound_ok);
    CHECK(pb.log_convex);
    CHECK(pb.first_step_ok);
    CHECK(!pb.apex);
    CHECK(rep.all_ok);
    CHECK(rep.polar == pb.mu_sequence[rec.n() - 1]);  // equality case
}

TEST_CASE("degree-bound report skips apex points of cones") {
    const CorpusRecord& rec = find_record("cone-over-cubic");
    Budget b{10'000'000, 0};
    std::vector<ProjectivePoint> pts;
    for (const auto& p : rec.points) pts.push_back(p.point());
    BoundsReport rep = degree_bounds_report(rec.hypersurface(), pts, 42, 5, b);
    REQUIRE(rep.points.size() == 1);
    CHECK(rep.points.front().apex);
    CHECK(rep.all_ok);
}

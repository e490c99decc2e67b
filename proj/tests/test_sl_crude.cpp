#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "enclose/sl_problem.hpp"
#include "sl_fixtures.hpp"

using namespace enclose;

namespace {
double ulp_of(double x) { return std::nextafter(std::abs(x), 1e308) - std::abs(x); }
}

TEST_CASE("cos problem, first quarter cell: [4,8], [20,24], [68,72]") {
    SLProblem p = fixtures::cos_problem();
    SLProblem cell = p.sub(PiAffine(0.0), PiAffine::pi(0.25), {BC::Neumann, BC::Neumann});
    EnclosureList e = crude_enclosure(cell, 70.0);
    REQUIRE(e.size() == 3);
    CHECK(e.disjoint);
    const double expect[3][2] = {{4, 8}, {20, 24}, {68, 72}};
    for (int i = 0; i < 3; ++i) {
        CHECK(e.entries[i].lo <= expect[i][0]);
        CHECK(e.entries[i].hi >= expect[i][1]);
        CHECK(std::abs(e.entries[i].lo - expect[i][0]) <= ulp_of(expect[i][0]));
        CHECK(std::abs(e.entries[i].hi - expect[i][1]) <= ulp_of(expect[i][1]));
    }
    CHECK(e.ceiling >= 147.9);
}

TEST_CASE("cos problem, second quarter cell: [0,4], [16,20], [64,68]") {
    SLProblem p = fixtures::cos_problem();
    SLProblem cell = p.sub(PiAffine::pi(0.25), PiAffine::pi(0.5), {BC::Neumann, BC::Neumann});
    EnclosureList e = crude_enclosure(cell, 70.0);
    REQUIRE(e.size() == 3);
    CHECK(e.disjoint);
    CHECK(e.entries[0].contains(Interval(0.0, 4.0)));
    CHECK(e.entries[1].contains(Interval(16.0, 20.0)));
    CHECK(e.entries[2].contains(Interval(64.0, 68.0)));
    CHECK(std::abs(e.entries[2].hi - 68.0) < 1e-12);
}

TEST_CASE("airy problem, first eighth with mixed conditions") {
    SLProblem p = fixtures::airy_problem();
    SLProblem cell = p.sub(PiAffine(0.0), PiAffine(0.125), {BC::Dirichlet, BC::Neumann});
    EnclosureList e = crude_enclosure(cell, 1550.0);
    REQUIRE(e.size() == 2);
    CHECK(e.disjoint);
    // 16 pi^2 ~ 157.91, + [0, 125]
    CHECK(e.entries[0].lo == doctest::Approx(157.91).epsilon(1e-4));
    CHECK(e.entries[0].hi == doctest::Approx(282.91).epsilon(1e-4));
    CHECK(e.entries[1].lo == doctest::Approx(1421.22).epsilon(1e-4));
    CHECK(e.entries[1].hi == doctest::Approx(1546.22).epsilon(1e-4));
    // rounds to the printed bounds
    CHECK(157.0 < e.entries[0].lo);
    CHECK(e.entries[0].hi < 283.0);
}

TEST_CASE("constant potential gives near-zero-width entries") {
    SLProblem p = fixtures::free_problem();
    EnclosureList e = crude_enclosure(p, 10.0);
    REQUIRE(e.size() == 4);  // 0, 1, 4, 9
    for (int i = 0; i < 4; ++i) {
        CHECK(e.entries[i].contains(double(i) * double(i)));
        CHECK(e.entries[i].width() <= 1e-12);
    }
    CHECK(e.disjoint);
}

TEST_CASE("non-disjoint ranges clear the flag") {
    SLProblem p = fixtures::cos_problem();  // full domain: V range [0,8] vs gap 1
    EnclosureList e = crude_enclosure(p, 70.0);
    CHECK_FALSE(e.disjoint);
}

TEST_CASE("nonpositive a is rejected") {
    SLProblem p = fixtures::cos_problem();
    p.a = CoefficientFn::constant(0.0);
    CHECK_THROWS_AS(crude_enclosure(p, 10.0), NonPositiveA);
}

TEST_CASE("uniform partition depths match the worked examples") {
    SLProblem cosp = fixtures::cos_problem();
    Partition p1 = uniform_partition(cosp, 70.0);
    CHECK(p1.level == 2);
    REQUIRE(p1.points.size() == 5);
    CHECK(p1.points[1].pi_coeff == 0.25);
    CHECK(p1.points[2].pi_coeff == 0.5);

    SLProblem airy = fixtures::airy_problem();
    Partition p2 = uniform_partition(airy, 1000.0 * 9 / 8);
    CHECK(p2.level == 3);
    REQUIRE(p2.points.size() == 9);
    CHECK(p2.points[1].plain == 0.125);

    SLProblem freep = fixtures::free_problem();
    Partition p3 = uniform_partition(freep, 50.0);
    CHECK(p3.level == 0);
}

TEST_CASE("adaptive bisection point selection") {
    CHECK(adaptive_bisection_point(0.0, 1.0, {}) == 0.5);
    double g = adaptive_bisection_point(0.0, 1.0, {0.5});
    CHECK(g == 0.25);
    // several constraints: stays in the middle half at the required distance
    std::vector<double> crit = {0.3, 0.45, 0.55, 0.7};
    double len_dist = 1.0 / (4.0 * crit.size());
    double g2 = adaptive_bisection_point(0.0, 1.0, crit);
    CHECK(g2 >= 0.25);
    CHECK(g2 <= 0.75);
    for (double c : crit) CHECK(std::abs(g2 - c) >= len_dist - 1e-15);
}

TEST_CASE("partition includes jump points of a") {
    SLProblem p;
    p.domain_lo = PiAffine(0.0);
    p.domain_hi = PiAffine(1.0);
    p.a = CoefficientFn::piecewise({{PiAffine(0.0), PiAffine(0.3), {Term::poly(Interval(1.0), 0)}},
                                    {PiAffine(0.3), PiAffine(1.0), {Term::poly(Interval(2.0), 0)}}});
    p.V = CoefficientFn{};
    p.bc = {BC::Neumann, BC::Neumann};
    Partition part = uniform_partition(p, 30.0);
    bool found = false;
    for (const auto& pt : part.points)
        if (std::abs(pt.approx() - 0.3) < 1e-12) found = true;
    CHECK(found);
}

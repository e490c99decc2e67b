#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "enclose/rrtl.hpp"
#include "enclose/sl_gram.hpp"
#include "sl_fixtures.hpp"

using namespace enclose;

TEST_CASE("constrained bases satisfy their endpoint conditions exactly") {
    for (BCPair bc : {BCPair{BC::Neumann, BC::Neumann}, BCPair{BC::Dirichlet, BC::Dirichlet},
                      BCPair{BC::Dirichlet, BC::Neumann}, BCPair{BC::Neumann, BC::Dirichlet}}) {
        auto basis = constrained_poly_basis(bc, 12);
        CHECK(int(basis.size()) == 11);
        for (const IvPoly& f : basis) {
            IvPoly d = f.derivative();
            Interval fm = f.eval(Interval(-1.0)), fp = f.eval(Interval(1.0));
            Interval dm = d.eval(Interval(-1.0)), dp = d.eval(Interval(1.0));
            if (bc.left == BC::Dirichlet) {
                CHECK(fm.lo == 0.0);
                CHECK(fm.hi == 0.0);
            } else {
                CHECK(dm.lo == 0.0);
                CHECK(dm.hi == 0.0);
            }
            if (bc.right == BC::Dirichlet) {
                CHECK(fp.lo == 0.0);
                CHECK(fp.hi == 0.0);
            } else {
                CHECK(dp.lo == 0.0);
                CHECK(dp.hi == 0.0);
            }
        }
    }
}

TEST_CASE("explicit basis {1, cos x} on (0, pi): diagonal Gram data") {
    SLProblem p = fixtures::free_problem();
    Interval h = length_between(p.domain_lo, p.domain_hi) * Interval(0.5);
    // x = pi/2 + h t, so cos x = -sin(h t): key 1, scale h
    std::vector<TrigPoly> basis;
    basis.push_back(TrigPoly::poly(IvPoly::constant(Interval(1.0))));
    basis.push_back(TrigPoly::trig(TrigPoly::Sin, 1.0, h, IvPoly::constant(Interval(-1.0))));
    GramTriple g = assemble_gram(p, std::move(basis));

    double pi = 3.14159265358979323846;
    CHECK(g.m0.at(0, 0).contains(pi));
    CHECK(g.m0.at(1, 1).contains(pi / 2));
    CHECK(g.m0.at(0, 1).contains(0.0));
    CHECK(g.m0.at(0, 1).width() < 1e-12);
    CHECK(g.m1.at(0, 0).contains(0.0));
    CHECK(g.m1.at(1, 1).contains(pi / 2));
    CHECK(g.m1.at(0, 1).contains(0.0));
    REQUIRE(g.has_m2);
    CHECK(g.m2.at(0, 0).contains(0.0));
    CHECK(g.m2.at(1, 1).contains(pi / 2));
    CHECK(g.m2.at(1, 1).width() < 1e-10);
}

TEST_CASE("constant potential shift: m1(V=c) = m1(V=0) + c m0") {
    SLProblem p0 = fixtures::free_problem();
    SLProblem pc = p0;
    pc.V = CoefficientFn::constant(2.5);
    GramTriple g0 = assemble_gram(p0, 8);
    GramTriple gc = assemble_gram(pc, 8);
    for (int i = 0; i < g0.dim(); ++i)
        for (int j = 0; j < g0.dim(); ++j) {
            Interval expect = g0.m1.at(i, j) + Interval(2.5) * g0.m0.at(i, j);
            Interval got = gc.m1.at(i, j);
            CHECK(got.lo <= expect.hi);
            CHECK(expect.lo <= got.hi);  // consistent enclosures of one value
        }
}

TEST_CASE("free Neumann problem: RR upper bounds above {0, 1, 4} and close") {
    SLProblem p = fixtures::free_problem();
    GramTriple g = assemble_gram(p, 6);
    auto ups = rr_upper(g, 3);
    const double exact[3] = {0.0, 1.0, 4.0};
    for (int i = 0; i < 3; ++i) {
        CHECK(ups[i].hi >= exact[i]);
        CHECK(ups[i].hi <= exact[i] + 0.1 * (exact[i] > 0 ? exact[i] : 1.0));
    }
}

TEST_CASE("airy cell (0, 1/4) at degree 12 reproduces the RR value 205.942") {
    SLProblem p = fixtures::airy_problem();
    SLProblem cell = p.sub(PiAffine(0.0), PiAffine(0.25), {BC::Dirichlet, BC::Neumann});
    GramTriple g = assemble_gram(cell, 12);
    auto ups = rr_upper(g, 1);
    CHECK(ups[0].hi == doctest::Approx(205.942).epsilon(1e-5));
    CHECK(ups[0].hi >= 205.94);
}

TEST_CASE("gram assembly on the cos problem has tight entries") {
    SLProblem p = fixtures::cos_problem();
    GramTriple g = assemble_gram(p, 16);
    REQUIRE(g.has_m2);
    double worst = 0.0;
    for (int i = 0; i < g.dim(); ++i)
        for (int j = 0; j < g.dim(); ++j) worst = std::max(worst, g.m2.at(i, j).width());
    CHECK(worst < 1e-8);
}

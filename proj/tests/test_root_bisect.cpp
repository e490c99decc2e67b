#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "enclose/root_bisect.hpp"

using enclose::Interval;

TEST_CASE("sqrt(2) via x^2 - 2") {
    auto f = [](const Interval& x) { return x * x - Interval(2.0); };
    auto r = enclose::bisect_root(f, Interval(1.0, 2.0), 1e-10);
    CHECK_FALSE(r.stalled);
    CHECK(r.bracket.width() <= 1e-10);
    CHECK(r.bracket.contains(1.41421356237));
}

TEST_CASE("identity root at 0") {
    auto f = [](const Interval& x) { return x; };
    auto r = enclose::bisect_root(f, Interval(-1.0, 1.0), 1e-12);
    CHECK(r.bracket.contains(0.0));
    CHECK_FALSE(r.stalled);
}

TEST_CASE("no certified sign change throws") {
    auto f = [](const Interval& x) { return x * x + Interval(1.0); };
    CHECK_THROWS_AS(enclose::bisect_root(f, Interval(-1.0, 1.0), 1e-8), enclose::NoSignChange);
}

TEST_CASE("undecidable plateau stalls with flag") {
    // sign certified only outside [-0.25, 0.25]; inside, the evaluation
    // straddles zero no matter how narrow the argument
    auto f = [](const Interval& x) {
        if (x.hi < -0.25) return Interval(-2.0, -1.0);
        if (x.lo > 0.25) return Interval(1.0, 2.0);
        return Interval(-1.0, 1.0);
    };
    auto r = enclose::bisect_root(f, Interval(-1.0, 1.0), 1e-12);
    CHECK(r.stalled);
    CHECK(r.bracket.width() > 1e-12);
    CHECK(r.bracket.contains(0.25));  // bracket still encloses the sign change region
}

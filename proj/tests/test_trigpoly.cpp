#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "enclose/trigpoly.hpp"
#include "oracles.hpp"

using enclose::Interval;
using enclose::IvPoly;
using enclose::TrigPoly;
using oracle::quad;

namespace {

template <class F>
double integral_ref(F f, double a, double b) {
    return oracle::integrate_quad(f, a, b);
}

IvPoly pt(std::initializer_list<double> cs) {
    std::vector<Interval> c;
    for (double x : cs) c.emplace_back(x);
    return IvPoly(std::move(c));
}

}  // namespace

TEST_CASE("pure polynomial integral") {
    // (1 + 2t + 3t^2) over [-1, 1] = 2 + 0 + 2 = 4
    Interval v = enclose::integrate_poly(pt({1, 2, 3}), Interval(-1.0), Interval(1.0));
    CHECK(v.contains(4.0));
    CHECK(v.width() < 1e-14);
}

TEST_CASE("poly times trig integrals vs quadrature") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> wdist(0.05, 12.0);
    for (int trial = 0; trial < 120; ++trial) {
        int d = int(rng() % 9);
        std::vector<double> cs(d + 1);
        for (auto& x : cs) x = u(rng);
        IvPoly p;
        for (double x : cs) p.c.emplace_back(x);
        double w = wdist(rng);
        double a = -1.0 + 0.3 * u(rng), b = 1.0 + 0.3 * u(rng);
        for (bool is_sin : {false, true}) {
            Interval got = enclose::integrate_poly_trig(p, is_sin, Interval(w),
                                                        Interval(a), Interval(b));
            double ref = integral_ref(
                [&](quad t) {
                    quad acc = 0;
                    for (int k = d; k >= 0; --k) acc = acc * t + quad(cs[k]);
                    return acc * (is_sin ? sinq(quad(w) * t) : cosq(quad(w) * t));
                },
                a, b);
            CHECK(got.contains(ref));
            CHECK(got.width() < 5e-12);
        }
    }
}

TEST_CASE("high frequency uses the recursion branch") {
    IvPoly p = pt({0.5, -1.0, 2.0});
    double w = 80.0;
    Interval got = enclose::integrate_poly_trig(p, true, Interval(w), Interval(-1.0), Interval(1.0));
    double ref = integral_ref(
        [&](quad t) { return (quad(0.5) - t + 2 * t * t) * sinq(quad(w) * t); }, -1.0, 1.0);
    CHECK(got.contains(ref));
    CHECK(got.width() < 1e-9);
}

TEST_CASE("product, derivative and evaluation close the class") {
    Interval h(0.5);
    TrigPoly f = TrigPoly::poly(pt({0, 1})); // t
    TrigPoly g = TrigPoly::trig(TrigPoly::Cos, 2.0, h, pt({1}));  // cos(2*0.5*t) = cos t
    TrigPoly fg = f * g;  // t cos t
    Interval v = fg.eval(Interval(1.0));
    CHECK(v.contains(std::cos(1.0)));

    TrigPoly d = fg.derivative();  // cos t - t sin t
    Interval dv = d.eval(Interval(0.7));
    CHECK(dv.contains(std::cos(0.7) - 0.7 * std::sin(0.7)));

    // integral of t cos t over [0, 1] = cos 1 + sin 1 - 1
    Interval I = fg.integrate(Interval(0.0), Interval(1.0));
    CHECK(I.contains(std::cos(1.0) + std::sin(1.0) - 1.0));
    CHECK(I.width() < 1e-12);
}

TEST_CASE("product-to-sum squares") {
    Interval h(1.0);
    TrigPoly c = TrigPoly::trig(TrigPoly::Cos, 2.0, h, pt({1}));
    TrigPoly cc = c * c;  // cos^2(2t) = 1/2 + cos(4t)/2
    Interval I = cc.integrate(Interval(0.0), Interval(2.0));
    double ref = integral_ref([](quad t) { return cosq(2 * t) * cosq(2 * t); }, 0.0, 2.0);
    CHECK(I.contains(ref));
    CHECK(I.width() < 1e-13);

    TrigPoly s = TrigPoly::trig(TrigPoly::Sin, 2.0, h, pt({1}));
    TrigPoly sc = s * c;  // sin(2t)cos(2t) = sin(4t)/2
    Interval I2 = sc.integrate(Interval(0.0), Interval(2.0));
    double ref2 = integral_ref([](quad t) { return sinq(2 * t) * cosq(2 * t); }, 0.0, 2.0);
    CHECK(I2.contains(ref2));

    TrigPoly mix = s * s + cc;  // identically 1
    Interval I3 = mix.integrate(Interval(0.0), Interval(1.0));
    CHECK(I3.contains(1.0));
    CHECK(I3.width() < 1e-13);
}

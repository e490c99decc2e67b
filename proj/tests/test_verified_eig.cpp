#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "enclose/interval_linalg.hpp"
#include "oracles.hpp"

using enclose::EigEnclosure;
using enclose::Interval;
using enclose::IntervalMatrix;

namespace {

IntervalMatrix sym_from(const std::vector<double>& a, int n) {
    IntervalMatrix m = IntervalMatrix::from_point(a, n, n);
    m.symmetrize();
    return m;
}

}  // namespace

TEST_CASE("identity 3x3") {
    auto enc = enclose::verified_sym_eig(IntervalMatrix::identity(3));
    REQUIRE(enc.values.size() == 3);
    for (auto& v : enc.values) {
        CHECK(v.contains(1.0));
        CHECK(v.width() <= 1e-12);
    }
}

TEST_CASE("path graph Laplacian on 3 vertices has spectrum 0,1,3") {
    std::vector<double> a = {1, -1, 0, -1, 2, -1, 0, -1, 1};
    auto enc = enclose::verified_sym_eig(sym_from(a, 3));
    CHECK(enc.values[0].contains(0.0));
    CHECK(enc.values[1].contains(1.0));
    CHECK(enc.values[2].contains(3.0));
    for (auto& v : enc.values) CHECK(v.width() < 1e-10);
}

TEST_CASE("random symmetric matrices vs quad-precision oracle") {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 2 + int(rng() % 7);  // up to 8x8
        std::vector<double> a(size_t(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) a[i * n + j] = a[j * n + i] = u(rng);
        auto enc = enclose::verified_sym_eig(sym_from(a, n));
        auto ev = oracle::sym_eigenvalues_quad(a, n);
        for (int i = 0; i < n; ++i) {
            CHECK(enc.values[i].lo <= ev[i]);
            CHECK(ev[i] <= enc.values[i].hi);
        }
    }
}

TEST_CASE("entrywise perturbation keeps oracle eigenvalues enclosed") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_real_distribution<double> pert(-1.0, 1.0);
    const double eps = 1e-6;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 3 + int(rng() % 4);
        std::vector<double> a(size_t(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) a[i * n + j] = a[j * n + i] = u(rng);
        IntervalMatrix am(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                am.at(i, j) = Interval(a[i * n + j] - eps, a[i * n + j] + eps);
        am.symmetrize();
        auto enc = enclose::verified_sym_eig(am);
        // a random symmetric member of A +- eps
        std::vector<double> ap = a;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) ap[i * n + j] = ap[j * n + i] = a[i * n + j] + eps * pert(rng);
        auto ev = oracle::sym_eigenvalues_quad(ap, n);
        for (int i = 0; i < n; ++i) {
            CHECK(enc.values[i].lo <= ev[i]);
            CHECK(ev[i] <= enc.values[i].hi);
        }
    }
}

TEST_CASE("diagonal pencil") {
    std::vector<double> a = {2, 0, 0, 8}, b = {1, 0, 0, 2};
    auto enc = enclose::verified_gen_eig(sym_from(a, 2), sym_from(b, 2));
    CHECK(enc.values[0].contains(2.0));
    CHECK(enc.values[1].contains(4.0));
    CHECK(enc.values[0].width() < 1e-10);
}

TEST_CASE("identity pencil A = B") {
    std::vector<double> b = {3, 1, 0, 1, 4, 1, 0, 1, 5};
    auto bm = sym_from(b, 3);
    auto enc = enclose::verified_gen_eig(bm, bm);
    for (auto& v : enc.values) CHECK(v.contains(1.0));
}

TEST_CASE("random SPD pencils vs quad oracle") {
    std::mt19937_64 rng(31337);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + int(rng() % 3);  // up to 4x4
        std::vector<double> a(size_t(n) * n), c(size_t(n) * n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) a[i * n + j] = a[j * n + i] = u(rng);
        // B = C C^T + I, SPD
        std::vector<double> b(size_t(n) * n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) c[i * n + j] = 0.5 * u(rng);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double s = (i == j) ? 1.0 : 0.0;
                for (int k = 0; k < n; ++k) s += c[i * n + k] * c[j * n + k];
                b[i * n + j] = s;
            }
        auto enc = enclose::verified_gen_eig(sym_from(a, n), sym_from(b, n));
        auto ev = oracle::gen_eigenvalues_quad(a, b, n);
        for (int i = 0; i < n; ++i) {
            CHECK(enc.values[i].lo <= ev[i]);
            CHECK(ev[i] <= enc.values[i].hi);
        }
    }
}

TEST_CASE("indefinite B is rejected") {
    std::vector<double> a = {1, 0, 0, 1}, b = {1, 0, 0, -1};
    CHECK_THROWS_AS(enclose::verified_gen_eig(sym_from(a, 2), sym_from(b, 2)),
                    enclose::NotPositiveDefinite);
}

TEST_CASE("serial and parallel interval matmul agree bit for bit") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    int n = 40;
    IntervalMatrix a(n, n), b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double x = u(rng), y = u(rng);
            a.at(i, j) = Interval(x, x + 0.01);
            b.at(i, j) = Interval(y, y + 0.01);
        }
    int saved = enclose::worker_threads();
    enclose::set_worker_threads(4);
    IntervalMatrix p = enclose::mat_mul(a, b);
    enclose::set_worker_threads(saved);
    IntervalMatrix s = enclose::mat_mul_serial(a, b);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            CHECK(p.at(i, j).lo == s.at(i, j).lo);
            CHECK(p.at(i, j).hi == s.at(i, j).hi);
        }
}

#include "enclose/interval_linalg.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <atomic>
#include <cstdlib>

#ifdef ENCLOSE_HAVE_OPENMP
#include <omp.h>
#endif

namespace enclose {

IntervalMatrix IntervalMatrix::identity(int n) {
    IntervalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Interval(1.0);
    m.symmetric_ = true;
    return m;
}

IntervalMatrix IntervalMatrix::from_point(const std::vector<double>& a, int rows, int cols) {
    IntervalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = Interval(a[size_t(i) * cols + j]);
    return m;
}

void IntervalMatrix::symmetrize() {
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j) {
            Interval v = intersect(at(i, j), at(j, i));
            at(i, j) = v;
            at(j, i) = v;
        }
    symmetric_ = true;
}

IntervalMatrix IntervalMatrix::transpose() const {
    IntervalMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

std::vector<double> IntervalMatrix::midpoint() const {
    std::vector<double> m(size_t(rows_) * cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m[size_t(i) * cols_ + j] = at(i, j).mid();
    return m;
}

double IntervalMatrix::frobenius_hi() const {
    double s = 0.0;
    for (const Interval& v : a_) {
        double m = std::max(std::abs(v.lo), std::abs(v.hi));
        s = add_up(s, mul_up(m, m));
    }
    return sqrt_up(s);
}

IntervalMatrix operator+(const IntervalMatrix& a, const IntervalMatrix& b) {
    IntervalMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}
IntervalMatrix operator-(const IntervalMatrix& a, const IntervalMatrix& b) {
    IntervalMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}
IntervalMatrix operator*(const Interval& s, const IntervalMatrix& a) {
    IntervalMatrix r(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = s * a.at(i, j);
    return r;
}

namespace {

std::atomic<int> g_threads{0};

int env_threads() {
    const char* s = std::getenv("ENCLOSE_THREADS");
    if (!s) return 0;
    int v = std::atoi(s);
    return v > 0 ? v : 1;
}

inline Interval dot_row_col(const IntervalMatrix& a, const IntervalMatrix& b, int i, int j) {
    Interval acc(0.0);
    for (int k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
    return acc;
}

}  // namespace

int worker_threads() {
    int v = g_threads.load();
    if (v == 0) {
        v = env_threads();
        if (v == 0) {
#ifdef ENCLOSE_HAVE_OPENMP
            v = omp_get_max_threads();
#else
            v = 1;
#endif
        }
        g_threads.store(v);
    }
    return v;
}

void set_worker_threads(int n) { g_threads.store(n > 0 ? n : 1); }

IntervalMatrix mat_mul_serial(const IntervalMatrix& a, const IntervalMatrix& b) {
    IntervalMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.at(i, j) = dot_row_col(a, b, i, j);
    return r;
}

IntervalMatrix mat_mul(const IntervalMatrix& a, const IntervalMatrix& b) {
#ifdef ENCLOSE_HAVE_OPENMP
    int nt = worker_threads();
    if (nt > 1 && a.rows() >= 24) {
        IntervalMatrix r(a.rows(), b.cols());
#pragma omp parallel for schedule(static) num_threads(nt)
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) r.at(i, j) = dot_row_col(a, b, i, j);
        return r;
    }
#endif
    return mat_mul_serial(a, b);
}

std::vector<Interval> mat_vec(const IntervalMatrix& a, const std::vector<Interval>& x) {
    std::vector<Interval> y(a.rows(), Interval(0.0));
    for (int i = 0; i < a.rows(); ++i) {
        Interval acc(0.0);
        for (int k = 0; k < a.cols(); ++k) acc += a.at(i, k) * x[k];
        y[i] = acc;
    }
    return y;
}

ApproxEig approx_sym_eig(const std::vector<double>& a, int n) {
    Eigen::MatrixXd m = Eigen::Map<const Eigen::MatrixXd>(a.data(), n, n);
    m = 0.5 * (m + m.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m);
    if (es.info() != Eigen::Success) throw VerificationFailed("approximate diagonalization failed");
    ApproxEig r;
    r.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
    r.vectors.assign(es.eigenvectors().data(), es.eigenvectors().data() + size_t(n) * n);
    return r;
}

ApproxEig approx_gen_eig(const std::vector<double>& a, const std::vector<double>& b, int n) {
    Eigen::MatrixXd ma = Eigen::Map<const Eigen::MatrixXd>(a.data(), n, n);
    Eigen::MatrixXd mb = Eigen::Map<const Eigen::MatrixXd>(b.data(), n, n);
    ma = 0.5 * (ma + ma.transpose()).eval();
    mb = 0.5 * (mb + mb.transpose()).eval();
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(ma, mb);
    if (es.info() != Eigen::Success) throw NotPositiveDefinite("approximate pencil solve failed");
    ApproxEig r;
    r.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
    r.vectors.assign(es.eigenvectors().data(), es.eigenvectors().data() + size_t(n) * n);
    return r;
}

namespace {

// Kato-Temple tightening of the i-th enclosure: with rho the Rayleigh
// quotient of the approximate eigenvector and eta its residual norm, an
// eigenvalue isolated in (a, b) satisfies
//   rho - eta^2/(b - rho) <= lambda <= rho + eta^2/(rho - a).
void kato_temple_refine(const IntervalMatrix& a, EigEnclosure& enc,
                        const std::vector<double>& vecs) {
    int n = a.rows();
    for (int i = 0; i < n; ++i) {
        bool sep_lo = (i == 0) || (enc.values[i - 1].hi < enc.values[i].lo);
        bool sep_hi = (i == n - 1) || (enc.values[i].hi < enc.values[i + 1].lo);
        if (!sep_lo || !sep_hi) continue;

        std::vector<Interval> q(n);
        for (int k = 0; k < n; ++k) q[k] = Interval(vecs[size_t(i) * n + k]);
        std::vector<Interval> w = mat_vec(a, q);
        Interval qq(0.0), qw(0.0), ww(0.0);
        for (int k = 0; k < n; ++k) {
            qq += q[k] * q[k];
            qw += q[k] * w[k];
            ww += w[k] * w[k];
        }
        if (!qq.strictly_positive()) continue;
        Interval rho = qw / qq;
        Interval eta2 = ww / qq - rho * rho;  // residual norm squared
        eta2 = Interval(std::max(eta2.lo, 0.0), std::max(eta2.hi, 0.0));

        Interval cur = enc.values[i];
        double below = (i == 0) ? -std::numeric_limits<double>::infinity() : enc.values[i - 1].hi;
        double above = (i == n - 1) ? std::numeric_limits<double>::infinity() : enc.values[i + 1].lo;

        double lo = cur.lo, hi = cur.hi;
        if (rho.hi < above) {
            if (std::isfinite(above)) {
                Interval gap = Interval(above) - rho;
                lo = std::max(lo, (rho - eta2 / gap).lo);
            } else {
                // top eigenvalue: any Rayleigh quotient is a lower bound
                lo = std::max(lo, rho.lo);
            }
        }
        if (rho.lo > below) {
            if (std::isfinite(below)) {
                Interval gap = rho - Interval(below);
                hi = std::min(hi, (rho + eta2 / gap).hi);
            } else {
                // bottom eigenvalue: any Rayleigh quotient is an upper bound
                hi = std::min(hi, rho.hi);
            }
        }
        if (lo <= hi) enc.values[i] = Interval(lo, hi);
    }
}

}  // namespace

EigEnclosure verified_sym_eig(const IntervalMatrix& a) {
    int n = a.rows();
    if (n == 0) return {};
    ApproxEig ap = approx_sym_eig(a.midpoint(), n);
    IntervalMatrix q(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) q.at(i, j) = Interval(ap.vectors[size_t(j) * n + i]);

    IntervalMatrix qt = q.transpose();
    IntervalMatrix aq = mat_mul(a, q);
    IntervalMatrix e = mat_mul(qt, aq);
    IntervalMatrix g = mat_mul(qt, q);
    double md = 0.0;
    for (int i = 0; i < n; ++i) {
        e.at(i, i) -= Interval(ap.values[i]);
        g.at(i, i) -= Interval(1.0);
        md = std::max(md, std::abs(ap.values[i]));
    }
    double en = e.frobenius_hi();
    double gn = g.frobenius_hi();
    if (gn >= 1.0) throw VerificationFailed("approximate diagonalization too inaccurate");

    double r = div_up(add_up(en, mul_up(md, gn)), sub_down(1.0, gn));
    EigEnclosure enc;
    enc.defect = Interval(0.0, r);
    enc.values.resize(n);
    for (int i = 0; i < n; ++i)
        enc.values[i] = Interval(sub_down(ap.values[i], r), add_up(ap.values[i], r));

    kato_temple_refine(a, enc, ap.vectors);
    // one more pass: refined neighbours may have opened new gaps
    kato_temple_refine(a, enc, ap.vectors);

    enc.verified.resize(n);
    for (int i = 0; i < n; ++i) {
        bool lo_ok = (i == 0) || (enc.values[i - 1].hi < enc.values[i].lo);
        bool hi_ok = (i == n - 1) || (enc.values[i].hi < enc.values[i + 1].lo);
        enc.verified[i] = lo_ok && hi_ok;
    }
    return enc;
}

namespace {

// X = L^-1 R for a point lower-triangular L, interval right-hand side.
IntervalMatrix forward_solve(const std::vector<double>& l, int n, const IntervalMatrix& r) {
    IntervalMatrix x(n, r.cols());
    for (int col = 0; col < r.cols(); ++col) {
        for (int i = 0; i < n; ++i) {
            Interval v = r.at(i, col);
            for (int k = 0; k < i; ++k) v -= Interval(l[size_t(i) * n + k]) * x.at(k, col);
            x.at(i, col) = v / Interval(l[size_t(i) * n + i]);
        }
    }
    return x;
}

// C = L^-1 A L^-T, symmetrized.
IntervalMatrix congruence_by_inverse_factor(const std::vector<double>& l, int n,
                                            const IntervalMatrix& a) {
    IntervalMatrix x = forward_solve(l, n, a);          // L^-1 A
    IntervalMatrix c = forward_solve(l, n, x.transpose());  // L^-1 A^T L^-T (transposed)
    c.symmetrize();
    return c;
}

}  // namespace

EigEnclosure verified_gen_eig(const IntervalMatrix& a, const IntervalMatrix& b) {
    int n = a.rows();
    if (n == 0) return {};
    // approximate Cholesky of mid(B)
    Eigen::MatrixXd mb = Eigen::Map<const Eigen::MatrixXd>(b.midpoint().data(), n, n);
    mb = 0.5 * (mb + mb.transpose()).eval();
    Eigen::LLT<Eigen::MatrixXd> llt(mb);
    if (llt.info() != Eigen::Success) throw NotPositiveDefinite("approximate Cholesky failed");
    Eigen::MatrixXd lf = llt.matrixL();
    std::vector<double> l(size_t(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) l[size_t(i) * n + j] = lf(i, j);

    IntervalMatrix at = congruence_by_inverse_factor(l, n, a);
    IntervalMatrix bt = congruence_by_inverse_factor(l, n, b);
    for (int i = 0; i < n; ++i) bt.at(i, i) -= Interval(1.0);
    double gn = bt.frobenius_hi();
    // ||L^-1 B L^-T - I|| < 1 certifies B positive definite
    if (gn >= 1.0) throw NotPositiveDefinite("B not verifiably positive definite");

    EigEnclosure core = verified_sym_eig(at);
    Interval scale(sub_down(1.0, gn), add_up(1.0, gn));
    for (Interval& v : core.values) v = v / scale;
    for (size_t i = 0; i < core.values.size(); ++i) {
        bool lo_ok = (i == 0) || (core.values[i - 1].hi < core.values[i].lo);
        bool hi_ok = (i + 1 == core.values.size()) || (core.values[i].hi < core.values[i + 1].lo);
        core.verified[i] = lo_ok && hi_ok;
    }
    return core;
}

void verify_spd(const IntervalMatrix& b) {
    int n = b.rows();
    IntervalMatrix g = b;
    for (int i = 0; i < n; ++i) g.at(i, i) -= Interval(1.0);
    if (g.frobenius_hi() < 1.0) return;  // close to identity
    // fall back to the congruence certificate
    Eigen::MatrixXd mb = Eigen::Map<const Eigen::MatrixXd>(b.midpoint().data(), n, n);
    mb = 0.5 * (mb + mb.transpose()).eval();
    Eigen::LLT<Eigen::MatrixXd> llt(mb);
    if (llt.info() != Eigen::Success) throw NotPositiveDefinite("not verifiably positive definite");
    Eigen::MatrixXd lf = llt.matrixL();
    std::vector<double> l(size_t(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) l[size_t(i) * n + j] = lf(i, j);
    IntervalMatrix bt = congruence_by_inverse_factor(l, n, b);
    for (int i = 0; i < n; ++i) bt.at(i, i) -= Interval(1.0);
    if (bt.frobenius_hi() >= 1.0) throw NotPositiveDefinite("not verifiably positive definite");
}

}  // namespace enclose

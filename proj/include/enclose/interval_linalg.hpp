#pragma once

#include <optional>
#include <vector>

#include "enclose/interval.hpp"

namespace enclose {

struct VerificationFailed : Error {
    using Error::Error;
};
struct NotPositiveDefinite : Error {
    using Error::Error;
};

class IntervalMatrix {
public:
    IntervalMatrix() = default;
    IntervalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static IntervalMatrix identity(int n);
    static IntervalMatrix from_point(const std::vector<double>& a, int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Interval& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const Interval& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    bool symmetric_flag() const { return symmetric_; }
    // Enforces entry(i,j) == entry(j,i) exactly by intersecting the two
    // computed enclosures of the same real value.
    void symmetrize();

    IntervalMatrix transpose() const;
    std::vector<double> midpoint() const;
    // Upper bound on the Frobenius norm.
    double frobenius_hi() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Interval> a_;
    bool symmetric_ = false;
};

IntervalMatrix operator+(const IntervalMatrix& a, const IntervalMatrix& b);
IntervalMatrix operator-(const IntervalMatrix& a, const IntervalMatrix& b);
IntervalMatrix operator*(const Interval& s, const IntervalMatrix& a);

// Dense interval product.  mat_mul dispatches to the OpenMP kernel for
// matrices past a size threshold when worker threads are enabled;
// mat_mul_serial is the reference implementation.  Both produce
// bit-identical results.
IntervalMatrix mat_mul_serial(const IntervalMatrix& a, const IntervalMatrix& b);
IntervalMatrix mat_mul(const IntervalMatrix& a, const IntervalMatrix& b);
std::vector<Interval> mat_vec(const IntervalMatrix& a, const std::vector<Interval>& x);

// Worker-thread cap shared by all parallel kernels.  Initialised from the
// ENCLOSE_THREADS environment variable; 1 forces the serial paths.
int worker_threads();
void set_worker_threads(int n);

struct EigEnclosure {
    std::vector<Interval> values;     // sorted by lower endpoint
    std::vector<bool> verified;       // entry disjoint from both neighbours
    Interval defect{0.0};             // residual-norm radius of the crude bound
};

// Rigorous enclosures of all eigenvalues of every symmetric point matrix
// contained in A.  Approximate diagonalisation in floating point, then an
// interval residual bound: with E = Q^T A Q - D and G = Q^T Q - I,
// every eigenvalue lies within (||E||_F + max|d| ||G||_F)/(1 - ||G||_F)
// of the matching d_i; entries with separated neighbours are tightened by
// a Kato-Temple step.  Throws VerificationFailed when ||G||_F >= 1.
EigEnclosure verified_sym_eig(const IntervalMatrix& a);

// Pencil (A, B) with B symmetric positive definite.  Reduces to the
// standard problem through an approximate Cholesky factor of B with
// interval forward/back substitution; positive definiteness of B is
// certified by ||L^-1 B L^-T - I||_F < 1.
EigEnclosure verified_gen_eig(const IntervalMatrix& a, const IntervalMatrix& b);

// Certifies positive definiteness (throws NotPositiveDefinite otherwise).
void verify_spd(const IntervalMatrix& b);

// Approximate (floating point) spectral data used to seed test spaces.
struct ApproxEig {
    std::vector<double> values;
    std::vector<double> vectors;  // column-major n*n
};
ApproxEig approx_sym_eig(const std::vector<double>& a, int n);
ApproxEig approx_gen_eig(const std::vector<double>& a, const std::vector<double>& b, int n);

}  // namespace enclose

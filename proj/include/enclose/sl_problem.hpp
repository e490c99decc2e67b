#pragma once

#include <optional>
#include <vector>

#include "enclose/enclosure_list.hpp"
#include "enclose/interval.hpp"
#include "enclose/trigpoly.hpp"

namespace enclose {

struct NonPositiveA : Error {
    using Error::Error;
};
struct DepthExceeded : Error {
    using Error::Error;
};

// Point represented as plain + pi_coeff * pi.  Both components are dyadic
// doubles in practice, so repeated halving is exact and pi-scaled domains
// keep exact pi-rational subinterval lengths.
struct PiAffine {
    double plain = 0.0;
    double pi_coeff = 0.0;

    PiAffine() = default;
    explicit PiAffine(double x) : plain(x) {}
    PiAffine(double p, double q) : plain(p), pi_coeff(q) {}
    static PiAffine pi(double q = 1.0) { return {0.0, q}; }

    Interval value() const;
    double approx() const { return plain + pi_coeff * 3.141592653589793; }
    bool operator==(const PiAffine& o) const {
        return plain == o.plain && pi_coeff == o.pi_coeff;
    }
};

PiAffine midpoint(const PiAffine& a, const PiAffine& b);
// Length b - a as an interval, exact-rational when the plain parts cancel.
Interval length_between(const PiAffine& a, const PiAffine& b);
// pi^2 / (b-a)^2, exact when the length is a pure pi-multiple.
Interval pi_sq_over_length_sq(const PiAffine& a, const PiAffine& b);

// One additive term of a coefficient function: c x^k or c sin/cos(w x).
struct Term {
    enum Kind { Poly, Sin, Cos };
    Kind kind = Poly;
    int degree = 0;      // Poly
    double frequency = 0.0;  // Sin/Cos; exact key, rational in practice
    Interval coeff{0.0};

    static Term poly(const Interval& c, int k) { return {Poly, k, 0.0, c}; }
    static Term trig(Kind kd, const Interval& c, double w) { return {kd, 0, w, c}; }
};

// Piecewise coefficient function; pieces cover the domain with disjoint
// interiors.  Piece boundaries of a(x) are recorded jump points that
// partitions must include.
class CoefficientFn {
public:
    struct Piece {
        PiAffine lo, hi;
        std::vector<Term> terms;
    };

    CoefficientFn() = default;
    static CoefficientFn constant(double c);
    static CoefficientFn single(std::vector<Term> terms);
    static CoefficientFn piecewise(std::vector<Piece> pieces);

    const std::vector<Piece>& pieces() const { return pieces_; }
    bool single_piece() const { return pieces_.size() <= 1; }
    // Interior piece boundaries (jump points) inside (lo, hi).
    std::vector<PiAffine> interior_breaks(const PiAffine& lo, const PiAffine& hi) const;

    // Range enclosure over [lo, hi].
    Interval range(const PiAffine& lo, const PiAffine& hi) const;
    // Representation over one cell in the shifted variable t in [-1,1],
    // x = mid + h t.  The cell must not straddle a piece boundary.
    TrigPoly on_cell(const PiAffine& lo, const PiAffine& hi) const;
    // Terms of the piece covering [sub_lo, sub_hi], expressed in the chart
    // of the (possibly larger) cell [chart_lo, chart_hi].
    TrigPoly on_chart(const PiAffine& chart_lo, const PiAffine& chart_hi,
                      const PiAffine& sub_lo, const PiAffine& sub_hi) const;

    bool is_constant_zero() const;

private:
    std::vector<Piece> pieces_;  // empty means identically zero everywhere
    Interval range_of_terms(const std::vector<Term>& ts, const Interval& x) const;
};

enum class BC { Neumann, Dirichlet };
struct BCPair {
    BC left = BC::Neumann;
    BC right = BC::Neumann;
};

struct SLProblem {
    PiAffine domain_lo, domain_hi;
    CoefficientFn a;  // verified positive on every piece
    CoefficientFn V;
    BCPair bc;

    SLProblem sub(const PiAffine& lo, const PiAffine& hi, BCPair cell_bc) const;
};

struct Partition {
    std::vector<PiAffine> points;  // strictly increasing, includes jump points
    int level = 0;                 // dyadic depth N (2^N cells before jump merging)
    int cells() const { return int(points.size()) - 1; }
};

// Homotopy ceiling schedule: levels E_n = E + n(E'-E)/N for 0 <= n <= N+1
// (for N = 0 the two levels are E and E').
struct Schedule {
    double E = 0.0;
    double Eprime = 0.0;
    int N = 0;

    Schedule() = default;
    Schedule(double e, double eprime, int n);
    double level(int n) const;
};

// Eigenvalue enclosures by comparison with constant-coefficient operators:
// with a0 <= a <= a1 and v0 <= V <= v1 on the domain of length L, the i-th
// eigenvalue lies in [a0 pi^2 c_i^2/L^2 + v0, a1 pi^2 c_i^2/L^2 + v1] where
// c_i is i, i+1 or i+1/2 for Neumann/Neumann, Dirichlet/Dirichlet and mixed
// endpoint conditions.  Entries are produced up to E'; the disjoint flag is
// set from a direct pairwise check on the emitted intervals (including
// separation from the first entry beyond E').
EnclosureList crude_enclosure(const SLProblem& p, double Eprime);

// Per-index crude lower bounds (valid without any disjointness).
std::vector<double> crude_lower_bounds(const SLProblem& p, int count);

// Smallest dyadic level N such that every cell of the uniform partition
// (with jump points of a merged in) has disjoint crude enclosures up to
// Eprime.  Throws DepthExceeded past max_level.
Partition uniform_partition(const SLProblem& p, double Eprime, int max_level = 14);

// Bisection point in the middle half of (alpha, beta), at distance at least
// (beta-alpha)/(4 max(P,1)) from each listed critical point; leftmost
// admissible candidate on a (beta-alpha)/(8P) grid.
double adaptive_bisection_point(double alpha, double beta,
                                const std::vector<double>& critical_points);

}  // namespace enclose

#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace enclose {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : Error {
    using Error::Error;
};

// Closed floating-point interval [lo, hi] with outward rounding.
// Every operation returns an interval containing the exact real result
// for all members of the operands.  Rounding is done by next-representable
// adjustment of endpoint results, so no global FP rounding mode is touched
// and values are freely shareable across threads.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    explicit Interval(double v) : lo(v), hi(v) {}
    Interval(double l, double h) : lo(l), hi(h) {
        if (!(lo <= hi)) throw DomainError("Interval: lo > hi");
    }

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    double rad() const { return 0.5 * (hi - lo); }
    bool is_point() const { return lo == hi; }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool strictly_positive() const { return lo > 0.0; }
    bool strictly_negative() const { return hi < 0.0; }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
};

inline double next_down(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double next_up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}

// Directed endpoint arithmetic.  The error terms of +,-,* are recovered
// exactly (two-sum / fma), so results are the true directed roundings,
// not one-ulp overshoots.
double add_down(double a, double b);
double add_up(double a, double b);
double sub_down(double a, double b);
double sub_up(double a, double b);
double mul_down(double a, double b);
double mul_up(double a, double b);
double div_down(double a, double b);
double div_up(double a, double b);
double sqrt_down(double a);
double sqrt_up(double a);

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);  // throws DomainError if 0 in b
Interval& operator+=(Interval& a, const Interval& b);
Interval& operator-=(Interval& a, const Interval& b);
Interval& operator*=(Interval& a, const Interval& b);

inline Interval operator+(const Interval& a, double b) { return a + Interval(b); }
inline Interval operator+(double a, const Interval& b) { return Interval(a) + b; }
inline Interval operator-(const Interval& a, double b) { return a - Interval(b); }
inline Interval operator-(double a, const Interval& b) { return Interval(a) - b; }
inline Interval operator*(const Interval& a, double b) { return a * Interval(b); }
inline Interval operator*(double a, const Interval& b) { return Interval(a) * b; }
inline Interval operator/(const Interval& a, double b) { return a / Interval(b); }
inline Interval operator/(double a, const Interval& b) { return Interval(a) / b; }

Interval sqrt(const Interval& a);      // requires a.lo >= 0
Interval sin(const Interval& a);
Interval cos(const Interval& a);
Interval exp(const Interval& a);
Interval cosh(const Interval& a);
Interval sinh(const Interval& a);
Interval pow_int(const Interval& a, unsigned n);
Interval abs(const Interval& a);

// Smallest interval containing both operands.
Interval hull(const Interval& a, const Interval& b);
// Intersection; throws DomainError when empty.
Interval intersect(const Interval& a, const Interval& b);

// Enclosure of pi, width one ulp.
Interval pi_enclosure();
// Enclosure of log 2 (used by exp argument reduction).
Interval ln2_enclosure();

std::string to_string(const Interval& a);

}  // namespace enclose

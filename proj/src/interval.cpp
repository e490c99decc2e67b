#include "enclose/interval.hpp"

#include <algorithm>
#include <cstdio>

namespace enclose {

namespace {

// Exact error of a+b (Knuth two-sum).  Valid in the absence of overflow.
inline double two_sum_err(double a, double b, double s) {
    double bv = s - a;
    double av = s - bv;
    return (a - av) + (b - bv);
}

inline bool tiny(double x) {
    // fma error recovery is unreliable once products reach the subnormal
    // range; fall back to unconditional widening there.
    return x != 0.0 && std::abs(x) < 1e-290;
}

// A round-to-nearest overflow means the true value exceeds the largest
// finite double, so the finite endpoint is a valid directed result.
inline double fix_down(double s) {
    return s == std::numeric_limits<double>::infinity() ? std::numeric_limits<double>::max() : s;
}
inline double fix_up(double s) {
    return s == -std::numeric_limits<double>::infinity() ? std::numeric_limits<double>::lowest() : s;
}

}  // namespace

double add_down(double a, double b) {
    double s = a + b;
    if (!std::isfinite(s)) return fix_down(s);
    double e = two_sum_err(a, b, s);
    return e < 0.0 ? next_down(s) : s;
}
double add_up(double a, double b) {
    double s = a + b;
    if (!std::isfinite(s)) return fix_up(s);
    double e = two_sum_err(a, b, s);
    return e > 0.0 ? next_up(s) : s;
}
double sub_down(double a, double b) { return add_down(a, -b); }
double sub_up(double a, double b) { return add_up(a, -b); }

double mul_down(double a, double b) {
    double p = a * b;
    if (!std::isfinite(p)) return fix_down(p);
    if (tiny(p)) return next_down(p);
    double e = std::fma(a, b, -p);
    return e < 0.0 ? next_down(p) : p;
}
double mul_up(double a, double b) {
    double p = a * b;
    if (!std::isfinite(p)) return fix_up(p);
    if (tiny(p)) return next_up(p);
    double e = std::fma(a, b, -p);
    return e > 0.0 ? next_up(p) : p;
}

double div_down(double a, double b) {
    double q = a / b;
    if (!std::isfinite(q)) return fix_down(q);
    if (tiny(q) || tiny(a)) return next_down(q);
    double r = std::fma(q, b, -a);  // q*b - a, exact
    if (r == 0.0) return q;
    // true quotient - q = -r/b
    bool true_below = (r > 0.0) == (b > 0.0);
    return true_below ? next_down(q) : q;
}
double div_up(double a, double b) {
    double q = a / b;
    if (!std::isfinite(q)) return fix_up(q);
    if (tiny(q) || tiny(a)) return next_up(q);
    double r = std::fma(q, b, -a);
    if (r == 0.0) return q;
    bool true_above = (r > 0.0) != (b > 0.0);
    return true_above ? next_up(q) : q;
}

double sqrt_down(double a) {
    double s = std::sqrt(a);
    if (!std::isfinite(s) || s == 0.0) return s;
    double r = std::fma(s, s, -a);
    return r > 0.0 ? next_down(s) : s;
}
double sqrt_up(double a) {
    double s = std::sqrt(a);
    if (!std::isfinite(s) || s == 0.0) return s;
    double r = std::fma(s, s, -a);
    return r < 0.0 ? next_up(s) : s;
}

Interval operator+(const Interval& a, const Interval& b) {
    return {add_down(a.lo, b.lo), add_up(a.hi, b.hi)};
}
Interval operator-(const Interval& a, const Interval& b) {
    return {sub_down(a.lo, b.hi), sub_up(a.hi, b.lo)};
}
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
    double l = std::min(std::min(mul_down(a.lo, b.lo), mul_down(a.lo, b.hi)),
                        std::min(mul_down(a.hi, b.lo), mul_down(a.hi, b.hi)));
    double h = std::max(std::max(mul_up(a.lo, b.lo), mul_up(a.lo, b.hi)),
                        std::max(mul_up(a.hi, b.lo), mul_up(a.hi, b.hi)));
    return {l, h};
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw DomainError("interval division by interval containing 0");
    double l = std::min(std::min(div_down(a.lo, b.lo), div_down(a.lo, b.hi)),
                        std::min(div_down(a.hi, b.lo), div_down(a.hi, b.hi)));
    double h = std::max(std::max(div_up(a.lo, b.lo), div_up(a.lo, b.hi)),
                        std::max(div_up(a.hi, b.lo), div_up(a.hi, b.hi)));
    return {l, h};
}

Interval& operator+=(Interval& a, const Interval& b) { a = a + b; return a; }
Interval& operator-=(Interval& a, const Interval& b) { a = a - b; return a; }
Interval& operator*=(Interval& a, const Interval& b) { a = a * b; return a; }

Interval sqrt(const Interval& a) {
    if (a.lo < 0.0) throw DomainError("interval sqrt of negative interval");
    return {sqrt_down(a.lo), sqrt_up(a.hi)};
}

Interval hull(const Interval& a, const Interval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Interval intersect(const Interval& a, const Interval& b) {
    double l = std::max(a.lo, b.lo);
    double h = std::min(a.hi, b.hi);
    if (l > h) throw DomainError("empty interval intersection");
    return {l, h};
}

Interval abs(const Interval& a) {
    if (a.lo >= 0.0) return a;
    if (a.hi <= 0.0) return -a;
    return {0.0, std::max(-a.lo, a.hi)};
}

Interval pow_int(const Interval& a, unsigned n) {
    if (n == 0) return Interval(1.0);
    if (n == 1) return a;
    if (n % 2 == 1 || a.lo >= 0.0) {
        // monotone on the whole line (odd) or on [0,inf) (even, nonneg)
        double l = a.lo, h = a.hi;
        double rl = l, rh = h;
        for (unsigned k = 1; k < n; ++k) {
            rl = mul_down(rl, l);
            rh = mul_up(rh, h);
        }
        return {rl, rh};
    }
    if (a.hi <= 0.0) {
        Interval m = pow_int(-a, n);
        return m;  // even power of a nonpositive interval
    }
    // even power straddling zero
    Interval m = pow_int(Interval(0.0, std::max(-a.lo, a.hi)), n);
    return {0.0, m.hi};
}

Interval pi_enclosure() {
    // closest double below pi, and its successor
    return {0x1.921fb54442d18p+1, 0x1.921fb54442d19p+1};
}

Interval ln2_enclosure() {
    // closest double below log 2, and its successor
    return {0x1.62e42fefa39efp-1, 0x1.62e42fefa39fp-1};
}

namespace {

// sin on |r| <= 0.9: Taylor series in Horner form, remainder bounded by
// the first omitted term (0.9^25/25! < 1e-26).
Interval sin_core(const Interval& r) {
    Interval r2 = r * r;
    const int K = 11;
    Interval acc(1.0);
    for (int k = K; k >= 1; --k) {
        acc = Interval(1.0) - r2 * acc / Interval(double(2 * k) * double(2 * k + 1));
    }
    acc = r * acc;
    double tail = 1e-26;
    return acc + Interval(-tail, tail);
}

Interval cos_core(const Interval& r) {
    Interval r2 = r * r;
    const int K = 11;
    Interval acc(1.0);
    for (int k = K; k >= 1; --k) {
        acc = Interval(1.0) - r2 * acc / Interval(double(2 * k - 1) * double(2 * k));
    }
    double tail = 1e-26;
    return acc + Interval(-tail, tail);
}

Interval clamp_pm1(const Interval& a) {
    return {std::max(a.lo, -1.0), std::min(a.hi, 1.0)};
}

// sin/cos of a point argument, via reduction r = x - k*(pi/2).
void sincos_point(double x, Interval& s, Interval& c) {
    Interval half_pi = pi_enclosure() / 2.0;
    double k = std::nearbyint(x / half_pi.mid());
    Interval r = Interval(x) - Interval(k) * half_pi;
    long q = static_cast<long>(std::fmod(k, 4.0));
    if (q < 0) q += 4;
    Interval sr = sin_core(r), cr = cos_core(r);
    switch (q) {
        case 0: s = sr; c = cr; break;
        case 1: s = cr; c = -sr; break;
        case 2: s = -sr; c = -cr; break;
        default: s = -cr; c = sr; break;
    }
    s = clamp_pm1(s);
    c = clamp_pm1(c);
}

Interval sin_point(double x) {
    Interval s, c;
    sincos_point(x, s, c);
    return s;
}
Interval cos_point(double x) {
    Interval s, c;
    sincos_point(x, s, c);
    return c;
}

}  // namespace

Interval sin(const Interval& a) {
    Interval pi = pi_enclosure();
    if (a.width() >= 2.0 * pi.lo) return {-1.0, 1.0};
    Interval v = hull(sin_point(a.lo), sin_point(a.hi));
    // extrema at pi/2 + k*pi; include any the interval may touch
    double klo = std::floor(a.lo / pi.lo - 0.5) - 1;
    double khi = std::ceil(a.hi / pi.lo - 0.5) + 1;
    for (double k = klo; k <= khi; ++k) {
        Interval crit = (Interval(0.5) + Interval(k)) * pi;
        if (crit.hi >= a.lo && crit.lo <= a.hi) {
            bool even = std::fmod(k, 2.0) == 0.0;
            v = hull(v, Interval(even ? 1.0 : -1.0));
        }
    }
    return clamp_pm1(v);
}

Interval cos(const Interval& a) {
    Interval pi = pi_enclosure();
    if (a.width() >= 2.0 * pi.lo) return {-1.0, 1.0};
    Interval v = hull(cos_point(a.lo), cos_point(a.hi));
    // extrema at k*pi
    double klo = std::floor(a.lo / pi.lo) - 1;
    double khi = std::ceil(a.hi / pi.lo) + 1;
    for (double k = klo; k <= khi; ++k) {
        Interval crit = Interval(k) * pi;
        if (crit.hi >= a.lo && crit.lo <= a.hi) {
            bool even = std::fmod(k, 2.0) == 0.0;
            v = hull(v, Interval(even ? 1.0 : -1.0));
        }
    }
    return clamp_pm1(v);
}

namespace {

// exp on |r| <= 0.36: Taylor series with explicit tail.
Interval exp_core(const Interval& r) {
    const int K = 17;
    Interval acc(1.0);
    for (int k = K; k >= 1; --k) {
        acc = Interval(1.0) + r * acc / Interval(double(k));
    }
    // |r|^(K+1)/(K+1)! * 1/(1-|r|/(K+2)) < 2e-26 for |r| <= 0.36
    double tail = 2e-26;
    return acc + Interval(-tail, tail);
}

Interval exp_point(double x) {
    if (x > 709.0) throw DomainError("interval exp overflow");
    if (x < -709.0) return {0.0, 5e-308};
    Interval l2 = ln2_enclosure();
    double k = std::nearbyint(x / l2.mid());
    Interval r = Interval(x) - Interval(k) * l2;
    Interval e = exp_core(r);
    int ki = static_cast<int>(k);
    return {std::max(0.0, std::ldexp(e.lo, ki)), std::ldexp(e.hi, ki)};
}

}  // namespace

Interval exp(const Interval& a) {
    return {exp_point(a.lo).lo, exp_point(a.hi).hi};
}

Interval cosh(const Interval& a) {
    Interval e = exp(a);
    Interval v = (e + Interval(1.0) / e) * Interval(0.5);
    // cosh has a minimum of 1 at 0
    if (a.contains_zero()) v = hull(Interval(1.0), v);
    return {std::max(v.lo, 1.0), v.hi};
}

Interval sinh(const Interval& a) {
    Interval e = exp(a);
    return (e - Interval(1.0) / e) * Interval(0.5);
}

std::string to_string(const Interval& a) {
    char buf[80];
    std::snprintf(buf, sizeof buf, "[%.17g, %.17g]", a.lo, a.hi);
    return buf;
}

}  // namespace enclose

#pragma once

#include <vector>

#include "enclose/interval.hpp"

namespace enclose {

// Polynomial in one variable with interval coefficients.
struct IvPoly {
    std::vector<Interval> c;  // c[k] t^k

    IvPoly() = default;
    explicit IvPoly(std::vector<Interval> coeffs) : c(std::move(coeffs)) {}
    static IvPoly constant(const Interval& v) { return IvPoly({v}); }

    int degree() const { return int(c.size()) - 1; }
    bool is_zero() const;
    Interval eval(const Interval& t) const;
    IvPoly derivative() const;
    void trim();
};

IvPoly operator+(const IvPoly& a, const IvPoly& b);
IvPoly operator-(const IvPoly& a, const IvPoly& b);
IvPoly operator*(const IvPoly& a, const IvPoly& b);
IvPoly operator*(const Interval& s, const IvPoly& a);

// Function of the form
//   sum_k p_k(t) * { 1, sin(w_k s t), cos(w_k s t) }
// where the p_k are interval polynomials, the w_k are exact double keys and
// s is one shared interval frequency scale.  Closed under +, *, d/dt, so
// Gram integrands built from polynomial/trigonometric coefficients stay in
// the class and integrate in closed form.
class TrigPoly {
public:
    enum Kind { Poly = 0, Sin = 1, Cos = 2 };

    TrigPoly() = default;
    static TrigPoly poly(IvPoly p);
    static TrigPoly trig(Kind kind, double omega_key, const Interval& scale, IvPoly amplitude);

    bool empty() const { return parts_.empty(); }
    const Interval& scale() const { return scale_; }

    TrigPoly derivative() const;
    Interval eval(const Interval& t) const;
    // Definite integral over [a, b].
    Interval integrate(const Interval& a, const Interval& b) const;

    friend TrigPoly operator+(const TrigPoly& x, const TrigPoly& y);
    friend TrigPoly operator-(const TrigPoly& x, const TrigPoly& y);
    friend TrigPoly operator*(const TrigPoly& x, const TrigPoly& y);
    friend TrigPoly operator*(const Interval& s, const TrigPoly& x);

private:
    struct Part {
        Kind kind = Poly;
        double omega = 0.0;  // exact key; argument is omega * scale * t
        IvPoly p;
    };
    std::vector<Part> parts_;
    Interval scale_{1.0};
    bool has_trig_ = false;

    void add_part(Kind kind, double omega, IvPoly p);
    friend struct TrigPolyTestAccess;
};

// Definite integrals of p(t) * {1, sin(W t), cos(W t)} over [a, b] for an
// interval frequency W.  Exposed for tests.
Interval integrate_poly(const IvPoly& p, const Interval& a, const Interval& b);
Interval integrate_poly_trig(const IvPoly& p, bool is_sin, const Interval& w,
                             const Interval& a, const Interval& b);

}  // namespace enclose

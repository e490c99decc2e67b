#include "enclose/trigpoly.hpp"

#include <algorithm>
#include <cmath>

namespace enclose {

namespace {

// exactness check for frequency-key arithmetic
double exact_add(double a, double b) {
    double s = a + b;
    double bv = s - a;
    double err = (a - (s - bv)) + (b - bv);
    if (err != 0.0) throw DomainError("trig frequency keys do not combine exactly");
    return s;
}

}  // namespace

bool IvPoly::is_zero() const {
    for (const Interval& v : c)
        if (v.lo != 0.0 || v.hi != 0.0) return false;
    return true;
}

Interval IvPoly::eval(const Interval& t) const {
    Interval acc(0.0);
    for (size_t k = c.size(); k-- > 0;) acc = acc * t + c[k];
    return acc;
}

IvPoly IvPoly::derivative() const {
    if (c.size() <= 1) return IvPoly({Interval(0.0)});
    IvPoly d;
    d.c.resize(c.size() - 1);
    for (size_t k = 1; k < c.size(); ++k) d.c[k - 1] = Interval(double(k)) * c[k];
    return d;
}

void IvPoly::trim() {
    while (c.size() > 1 && c.back().lo == 0.0 && c.back().hi == 0.0) c.pop_back();
}

IvPoly operator+(const IvPoly& a, const IvPoly& b) {
    IvPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Interval(0.0));
    for (size_t k = 0; k < a.c.size(); ++k) r.c[k] += a.c[k];
    for (size_t k = 0; k < b.c.size(); ++k) r.c[k] += b.c[k];
    return r;
}
IvPoly operator-(const IvPoly& a, const IvPoly& b) {
    IvPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), Interval(0.0));
    for (size_t k = 0; k < a.c.size(); ++k) r.c[k] += a.c[k];
    for (size_t k = 0; k < b.c.size(); ++k) r.c[k] -= b.c[k];
    return r;
}
IvPoly operator*(const IvPoly& a, const IvPoly& b) {
    IvPoly r;
    if (a.c.empty() || b.c.empty()) return r;
    r.c.resize(a.c.size() + b.c.size() - 1, Interval(0.0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}
IvPoly operator*(const Interval& s, const IvPoly& a) {
    IvPoly r = a;
    for (Interval& v : r.c) v = s * v;
    return r;
}

Interval integrate_poly(const IvPoly& p, const Interval& a, const Interval& b) {
    Interval acc(0.0);
    Interval pa = a, pb = b;  // running powers a^{k+1}, b^{k+1}
    for (size_t k = 0; k < p.c.size(); ++k) {
        acc += p.c[k] * (pb - pa) / Interval(double(k + 1));
        pa = pa * a;
        pb = pb * b;
    }
    return acc;
}

namespace {

// moments m_j = integral of t^j over [a,b], j = 0..deg
std::vector<Interval> monomial_integrals(int deg, const Interval& a, const Interval& b) {
    std::vector<Interval> m(deg + 1);
    Interval pa = a, pb = b;
    for (int j = 0; j <= deg; ++j) {
        m[j] = (pb - pa) / Interval(double(j + 1));
        pa = pa * a;
        pb = pb * b;
    }
    return m;
}

double factorial_up(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f = mul_up(f, double(k));
    return f;
}

// series branch: substitute the Taylor series of sin/cos(Wt) and integrate
// termwise, with the Lagrange remainder integrated against |p|.
Interval poly_trig_series(const IvPoly& p, bool is_sin, const Interval& w,
                          const Interval& a, const Interval& b) {
    int d = p.degree();
    double tmax = std::max(std::abs(a.lo), std::abs(b.hi));
    double q = mul_up(std::max(std::abs(w.lo), std::abs(w.hi)), tmax);

    int terms = 8;
    double tail;
    for (;;) {
        int m = is_sin ? 2 * terms + 1 : 2 * terms;  // first omitted power
        tail = 1.0;
        for (int k = 0; k < m; ++k) tail = mul_up(tail, q);
        tail = div_up(tail, factorial_up(m));
        if (tail < 1e-24 || terms >= 60) break;
        terms += 4;
    }

    std::vector<Interval> mom = monomial_integrals(d + 2 * terms + 1, a, b);
    auto poly_moment = [&](int shift) {
        Interval acc(0.0);
        for (size_t k = 0; k < p.c.size(); ++k) acc += p.c[k] * mom[k + shift];
        return acc;
    };

    Interval w2 = w * w;
    Interval acc(0.0);
    Interval wpow = is_sin ? w : Interval(1.0);
    Interval fact(1.0);
    double sign = 1.0;
    for (int j = 0; j < terms; ++j) {
        int m = is_sin ? 2 * j + 1 : 2 * j;
        if (j > 0) {
            fact = fact * Interval(double(m)) * Interval(double(m - 1));
            wpow = wpow * w2;
        }
        acc += Interval(sign) * wpow * poly_moment(m) / fact;
        sign = -sign;
    }
    // remainder: |R_m(Wt)| <= q^m/m!, integrated against |p| over [a,b]
    Interval amp = abs(p.eval(hull(a, b)));
    double len = sub_up(b.hi, a.lo);
    double err = mul_up(mul_up(tail, amp.hi), len);
    return acc + Interval(-err, err);
}

// recursion branch, stable for |W| >= degree + 2:
//   int t^m cos(Wt) = [t^m sin(Wt)/W] - (m/W) int t^{m-1} sin(Wt)
//   int t^m sin(Wt) = [-t^m cos(Wt)/W] + (m/W) int t^{m-1} cos(Wt)
Interval poly_trig_recursion(const IvPoly& p, bool is_sin, const Interval& w,
                             const Interval& a, const Interval& b) {
    int d = p.degree();
    Interval wa = w * a, wb = w * b;
    Interval sin_a = sin(wa), sin_b = sin(wb), cos_a = cos(wa), cos_b = cos(wb);
    std::vector<Interval> ic(d + 1), is(d + 1);
    Interval pa(1.0), pb(1.0);  // t^m at the endpoints
    for (int m = 0; m <= d; ++m) {
        Interval bnd_c = (pb * sin_b - pa * sin_a) / w;
        Interval bnd_s = (pa * cos_a - pb * cos_b) / w;
        if (m == 0) {
            ic[0] = bnd_c;
            is[0] = bnd_s;
        } else {
            Interval mw = Interval(double(m)) / w;
            ic[m] = bnd_c - mw * is[m - 1];
            is[m] = bnd_s + mw * ic[m - 1];
        }
        pa = pa * a;
        pb = pb * b;
    }
    Interval acc(0.0);
    for (size_t k = 0; k < p.c.size(); ++k) acc += p.c[k] * (is_sin ? is[k] : ic[k]);
    return acc;
}

}  // namespace

namespace {

// Taylor shift: coefficients of p(c + s) as a polynomial in s.
IvPoly shift_poly(IvPoly p, const Interval& c) {
    int d = p.degree();
    for (int i = 0; i < d; ++i)
        for (int k = d - 1; k >= i; --k) p.c[k] += c * p.c[k + 1];
    return p;
}

}  // namespace

Interval integrate_poly_trig(const IvPoly& p, bool is_sin, const Interval& w,
                             const Interval& a, const Interval& b) {
    if (w.lo == 0.0 && w.hi == 0.0)
        return is_sin ? Interval(0.0) : integrate_poly(p, a, b);
    double wmag = std::max(std::abs(w.lo), std::abs(w.hi));
    double tmax = std::max(std::abs(a.lo), std::abs(b.hi));
    if (wmag * tmax <= 3.0) return poly_trig_series(p, is_sin, w, a, b);
    if (std::abs(w.lo) >= p.degree() + 2 && wmag * tmax > 256.0)
        return poly_trig_recursion(p, is_sin, w, a, b);

    // recenter per panel so the series argument stays small:
    // sin(W(c+s)) = sin(Wc)cos(Ws) + cos(Wc)sin(Ws), |W s| <= 2
    double len = b.hi - a.lo;
    int panels = std::min(256, std::max(1, int(std::ceil(wmag * len / 4.0))));
    Interval acc(0.0);
    for (int k = 0; k < panels; ++k) {
        double u = (k == 0) ? a.lo : a.lo + len * double(k) / panels;
        double v = (k == panels - 1) ? b.hi : a.lo + len * double(k + 1) / panels;
        Interval iu = (k == 0) ? a : Interval(u);
        Interval iv = (k == panels - 1) ? b : Interval(v);
        double c = 0.5 * (u + v);
        IvPoly ps = shift_poly(p, Interval(c));
        Interval wc = w * Interval(c);
        Interval swc = sin(wc), cwc = cos(wc);
        Interval slo = iu - Interval(c), shi = iv - Interval(c);
        Interval ci = poly_trig_series(ps, false, w, slo, shi);
        Interval si = poly_trig_series(ps, true, w, slo, shi);
        if (is_sin)
            acc += swc * ci + cwc * si;
        else
            acc += cwc * ci - swc * si;
    }
    return acc;
}

TrigPoly TrigPoly::poly(IvPoly p) {
    TrigPoly t;
    t.add_part(Poly, 0.0, std::move(p));
    return t;
}

TrigPoly TrigPoly::trig(Kind kind, double omega_key, const Interval& scale, IvPoly amplitude) {
    TrigPoly t;
    t.scale_ = scale;
    t.has_trig_ = true;
    t.add_part(kind, omega_key, std::move(amplitude));
    return t;
}

void TrigPoly::add_part(Kind kind, double omega, IvPoly p) {
    p.trim();
    if (p.is_zero()) return;
    if (kind != Poly && omega == 0.0) {
        if (kind == Sin) return;  // sin(0) = 0
        kind = Poly;              // cos(0) = 1
    }
    if (kind == Sin && omega < 0.0) {
        omega = -omega;
        p = Interval(-1.0) * p;
    }
    if (kind == Cos && omega < 0.0) omega = -omega;
    for (Part& q : parts_) {
        if (q.kind == kind && q.omega == omega) {
            q.p = q.p + p;
            return;
        }
    }
    parts_.push_back({kind, omega, std::move(p)});
}

TrigPoly operator+(const TrigPoly& x, const TrigPoly& y) {
    TrigPoly r = x;
    if (y.has_trig_) {
        if (r.has_trig_ && (r.scale_.lo != y.scale_.lo || r.scale_.hi != y.scale_.hi))
            throw DomainError("TrigPoly scale mismatch");
        r.scale_ = y.scale_;
        r.has_trig_ = true;
    }
    for (const auto& part : y.parts_) r.add_part(part.kind, part.omega, part.p);
    return r;
}

TrigPoly operator-(const TrigPoly& x, const TrigPoly& y) {
    return x + (Interval(-1.0) * y);
}

TrigPoly operator*(const Interval& s, const TrigPoly& x) {
    TrigPoly r = x;
    for (auto& part : r.parts_) part.p = s * part.p;
    return r;
}

TrigPoly operator*(const TrigPoly& x, const TrigPoly& y) {
    TrigPoly r;
    if (x.has_trig_ && y.has_trig_ &&
        (x.scale_.lo != y.scale_.lo || x.scale_.hi != y.scale_.hi))
        throw DomainError("TrigPoly scale mismatch");
    r.scale_ = x.has_trig_ ? x.scale_ : y.scale_;
    r.has_trig_ = x.has_trig_ || y.has_trig_;
    const Interval half(0.5);
    for (const auto& u : x.parts_) {
        for (const auto& v : y.parts_) {
            IvPoly p = u.p * v.p;
            if (u.kind == TrigPoly::Poly) {
                r.add_part(v.kind, v.omega, std::move(p));
            } else if (v.kind == TrigPoly::Poly) {
                r.add_part(u.kind, u.omega, std::move(p));
            } else {
                double wsum = exact_add(u.omega, v.omega);
                double wdif = exact_add(u.omega, -v.omega);
                IvPoly hp = half * p;
                if (u.kind == TrigPoly::Sin && v.kind == TrigPoly::Sin) {
                    r.add_part(TrigPoly::Cos, wdif, hp);
                    r.add_part(TrigPoly::Cos, wsum, Interval(-1.0) * hp);
                } else if (u.kind == TrigPoly::Cos && v.kind == TrigPoly::Cos) {
                    r.add_part(TrigPoly::Cos, wdif, hp);
                    r.add_part(TrigPoly::Cos, wsum, hp);
                } else if (u.kind == TrigPoly::Sin && v.kind == TrigPoly::Cos) {
                    r.add_part(TrigPoly::Sin, wsum, hp);
                    r.add_part(TrigPoly::Sin, wdif, hp);
                } else {  // cos * sin
                    r.add_part(TrigPoly::Sin, wsum, hp);
                    r.add_part(TrigPoly::Sin, -wdif, hp);
                }
            }
        }
    }
    return r;
}

TrigPoly TrigPoly::derivative() const {
    TrigPoly r;
    r.scale_ = scale_;
    r.has_trig_ = has_trig_;
    for (const auto& part : parts_) {
        r.add_part(part.kind, part.omega, part.p.derivative());
        if (part.kind == Sin) {
            // (p sin(Wt))' also produces p W cos(Wt)
            Interval w = Interval(part.omega) * scale_;
            r.add_part(Cos, part.omega, w * part.p);
        } else if (part.kind == Cos) {
            Interval w = Interval(part.omega) * scale_;
            r.add_part(Sin, part.omega, Interval(-1.0) * (w * part.p));
        }
    }
    return r;
}

Interval TrigPoly::eval(const Interval& t) const {
    Interval acc(0.0);
    for (const auto& part : parts_) {
        Interval amp = part.p.eval(t);
        if (part.kind == Poly) {
            acc += amp;
        } else {
            Interval arg = Interval(part.omega) * scale_ * t;
            acc += amp * (part.kind == Sin ? sin(arg) : cos(arg));
        }
    }
    return acc;
}

Interval TrigPoly::integrate(const Interval& a, const Interval& b) const {
    Interval acc(0.0);
    for (const auto& part : parts_) {
        if (part.kind == Poly) {
            acc += integrate_poly(part.p, a, b);
        } else {
            Interval w = Interval(part.omega) * scale_;
            acc += integrate_poly_trig(part.p, part.kind == Sin, w, a, b);
        }
    }
    return acc;
}

}  // namespace enclose

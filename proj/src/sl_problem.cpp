#include "enclose/sl_problem.hpp"

#include <algorithm>
#include <cmath>

namespace enclose {

Interval PiAffine::value() const {
    Interval v(plain);
    if (pi_coeff != 0.0) v += Interval(pi_coeff) * pi_enclosure();
    return v;
}

PiAffine midpoint(const PiAffine& a, const PiAffine& b) {
    return {0.5 * (a.plain + b.plain), 0.5 * (a.pi_coeff + b.pi_coeff)};
}

Interval length_between(const PiAffine& a, const PiAffine& b) {
    double dp = b.plain - a.plain;
    double dq = b.pi_coeff - a.pi_coeff;
    Interval v(dp);
    if (dq != 0.0) v += Interval(dq) * pi_enclosure();
    return v;
}

Interval pi_sq_over_length_sq(const PiAffine& a, const PiAffine& b) {
    double dp = b.plain - a.plain;
    double dq = b.pi_coeff - a.pi_coeff;
    if (dp == 0.0 && dq != 0.0) {
        // L = q pi, so pi^2/L^2 = 1/q^2 with no pi rounding at all
        return Interval(1.0) / (Interval(dq) * Interval(dq));
    }
    Interval L = length_between(a, b);
    Interval pi = pi_enclosure();
    return (pi * pi) / (L * L);
}

CoefficientFn CoefficientFn::constant(double c) {
    if (c == 0.0) return {};
    return single({Term::poly(Interval(c), 0)});
}

CoefficientFn CoefficientFn::single(std::vector<Term> terms) {
    CoefficientFn f;
    PiAffine lo(-std::numeric_limits<double>::infinity());
    PiAffine hi(std::numeric_limits<double>::infinity());
    f.pieces_.push_back({lo, hi, std::move(terms)});
    return f;
}

CoefficientFn CoefficientFn::piecewise(std::vector<Piece> pieces) {
    CoefficientFn f;
    f.pieces_ = std::move(pieces);
    return f;
}

bool CoefficientFn::is_constant_zero() const {
    for (const Piece& p : pieces_)
        for (const Term& t : p.terms)
            if (t.coeff.lo != 0.0 || t.coeff.hi != 0.0) return false;
    return true;
}

std::vector<PiAffine> CoefficientFn::interior_breaks(const PiAffine& lo,
                                                     const PiAffine& hi) const {
    std::vector<PiAffine> out;
    double a = lo.approx(), b = hi.approx();
    for (size_t i = 1; i < pieces_.size(); ++i) {
        const PiAffine& brk = pieces_[i].lo;
        double x = brk.approx();
        if (x > a + 1e-13 && x < b - 1e-13) out.push_back(brk);
    }
    return out;
}

Interval CoefficientFn::range_of_terms(const std::vector<Term>& ts, const Interval& x) const {
    Interval acc(0.0);
    for (const Term& t : ts) {
        switch (t.kind) {
            case Term::Poly: acc += t.coeff * pow_int(x, unsigned(t.degree)); break;
            case Term::Sin: acc += t.coeff * sin(Interval(t.frequency) * x); break;
            case Term::Cos: acc += t.coeff * cos(Interval(t.frequency) * x); break;
        }
    }
    return acc;
}

Interval CoefficientFn::range(const PiAffine& lo, const PiAffine& hi) const {
    if (pieces_.empty()) return Interval(0.0);
    Interval x = hull(lo.value(), hi.value());
    bool first = true;
    Interval out(0.0);
    for (const Piece& p : pieces_) {
        Interval plo = p.lo.value(), phi = p.hi.value();
        if (phi.hi <= x.lo || plo.lo >= x.hi) continue;  // no overlap
        double cl = std::max(x.lo, std::isfinite(plo.lo) ? plo.lo : x.lo);
        double ch = std::min(x.hi, std::isfinite(phi.hi) ? phi.hi : x.hi);
        if (!(cl <= ch)) continue;
        Interval r = range_of_terms(p.terms, Interval(cl, ch));
        out = first ? r : hull(out, r);
        first = false;
    }
    return first ? Interval(0.0) : out;
}

TrigPoly CoefficientFn::on_cell(const PiAffine& lo, const PiAffine& hi) const {
    return on_chart(lo, hi, lo, hi);
}

TrigPoly CoefficientFn::on_chart(const PiAffine& chart_lo, const PiAffine& chart_hi,
                                 const PiAffine& sub_lo, const PiAffine& sub_hi) const {
    // locate the piece covering the subinterval
    const std::vector<Term>* terms = nullptr;
    double cl = sub_lo.approx(), ch = sub_hi.approx();
    for (const Piece& p : pieces_) {
        if (p.lo.approx() <= cl + 1e-12 && ch <= p.hi.approx() + 1e-12) {
            terms = &p.terms;
            break;
        }
    }
    if (!terms) {
        if (pieces_.empty()) return TrigPoly::poly(IvPoly::constant(Interval(0.0)));
        throw DomainError("coefficient cell straddles a piece boundary");
    }

    PiAffine mid_pt = midpoint(chart_lo, chart_hi);
    Interval mid = mid_pt.value();
    Interval h = length_between(chart_lo, chart_hi) * Interval(0.5);

    TrigPoly out = TrigPoly::poly(IvPoly::constant(Interval(0.0)));
    for (const Term& t : *terms) {
        if (t.kind == Term::Poly) {
            // c (mid + h t)^k expanded in t
            std::vector<Interval> coeff(size_t(t.degree) + 1, Interval(0.0));
            Interval binom(1.0);
            // C(k,j) mid^{k-j} h^j, binomials built by interval recurrence
            std::vector<Interval> midpow(size_t(t.degree) + 1, Interval(1.0));
            std::vector<Interval> hpow(size_t(t.degree) + 1, Interval(1.0));
            for (int j = 1; j <= t.degree; ++j) {
                midpow[j] = midpow[j - 1] * mid;
                hpow[j] = hpow[j - 1] * h;
            }
            Interval c(1.0);
            for (int j = 0; j <= t.degree; ++j) {
                coeff[j] = t.coeff * c * midpow[t.degree - j] * hpow[j];
                c = c * Interval(double(t.degree - j)) / Interval(double(j + 1));
            }
            out = out + TrigPoly::poly(IvPoly(std::move(coeff)));
        } else {
            // c sin(w(mid + h t)) = c sin(w mid) cos(w h t) + c cos(w mid) sin(w h t)
            Interval wm = Interval(t.frequency) * mid;
            Interval s = sin(wm), cc = cos(wm);
            bool is_sin = t.kind == Term::Sin;
            Interval amp_cos = t.coeff * (is_sin ? s : cc);
            Interval amp_sin = is_sin ? t.coeff * cc : Interval(-1.0) * (t.coeff * s);
            out = out + TrigPoly::trig(TrigPoly::Cos, t.frequency, h,
                                       IvPoly::constant(amp_cos));
            out = out + TrigPoly::trig(TrigPoly::Sin, t.frequency, h,
                                       IvPoly::constant(amp_sin));
        }
    }
    return out;
}

SLProblem SLProblem::sub(const PiAffine& lo, const PiAffine& hi, BCPair cell_bc) const {
    SLProblem s = *this;
    s.domain_lo = lo;
    s.domain_hi = hi;
    s.bc = cell_bc;
    return s;
}

Schedule::Schedule(double e, double eprime, int n) : E(e), Eprime(eprime), N(n) {
    if (!(eprime > e)) throw DomainError("Schedule requires E' > E");
}

double Schedule::level(int n) const {
    if (N == 0) return n <= 0 ? E : Eprime;
    return E + double(n) * (Eprime - E) / double(N);
}

namespace {

double mode_offset(const BCPair& bc) {
    int d = (bc.left == BC::Dirichlet ? 1 : 0) + (bc.right == BC::Dirichlet ? 1 : 0);
    return 0.5 * d;  // 0 for N/N, 1/2 mixed, 1 for D/D
}

}  // namespace

EnclosureList crude_enclosure(const SLProblem& p, double Eprime) {
    Interval arange = p.a.range(p.domain_lo, p.domain_hi);
    Interval vrange = p.V.range(p.domain_lo, p.domain_hi);
    if (!(arange.lo > 0.0)) throw NonPositiveA("a(x) not verifiably positive on the cell");
    Interval base = pi_sq_over_length_sq(p.domain_lo, p.domain_hi);
    double delta = mode_offset(p.bc);

    EnclosureList out;
    double next_lo = 0.0;
    for (int i = 0;; ++i) {
        double c = double(i) + delta;
        Interval c2(c * c);  // exact for integer and half-integer modes
        double lo = (Interval(arange.lo) * base * c2 + Interval(vrange.lo)).lo;
        double hi = (Interval(arange.hi) * base * c2 + Interval(vrange.hi)).hi;
        if (lo > Eprime || i > 100000) {
            next_lo = lo;
            break;
        }
        out.entries.emplace_back(lo, hi);
    }
    out.ceiling = next_lo;
    out.disjoint = true;
    for (int i = 0; i + 1 < out.size(); ++i)
        if (!(out.entries[i].hi < out.entries[i + 1].lo)) out.disjoint = false;
    if (!out.entries.empty() && !(out.entries.back().hi < next_lo)) out.disjoint = false;
    return out;
}

std::vector<double> crude_lower_bounds(const SLProblem& p, int count) {
    Interval arange = p.a.range(p.domain_lo, p.domain_hi);
    Interval vrange = p.V.range(p.domain_lo, p.domain_hi);
    if (!(arange.lo > 0.0)) throw NonPositiveA("a(x) not verifiably positive on the cell");
    Interval base = pi_sq_over_length_sq(p.domain_lo, p.domain_hi);
    double delta = mode_offset(p.bc);
    std::vector<double> lows(count);
    for (int i = 0; i < count; ++i) {
        double c = double(i) + delta;
        lows[i] = (Interval(arange.lo) * base * Interval(c * c) + Interval(vrange.lo)).lo;
    }
    return lows;
}

namespace {

std::vector<PiAffine> dyadic_points(const PiAffine& lo, const PiAffine& hi, int level) {
    std::vector<PiAffine> pts = {lo, hi};
    for (int l = 0; l < level; ++l) {
        std::vector<PiAffine> next;
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            next.push_back(pts[i]);
            next.push_back(midpoint(pts[i], pts[i + 1]));
        }
        next.push_back(pts.back());
        pts = std::move(next);
    }
    return pts;
}

}  // namespace

Partition uniform_partition(const SLProblem& p, double Eprime, int max_level) {
    std::vector<PiAffine> jumps = p.a.interior_breaks(p.domain_lo, p.domain_hi);
    for (int n = 0; n <= max_level; ++n) {
        std::vector<PiAffine> pts = dyadic_points(p.domain_lo, p.domain_hi, n);
        for (const PiAffine& j : jumps) {
            bool present = false;
            for (const PiAffine& q : pts)
                if (std::abs(q.approx() - j.approx()) < 1e-13) present = true;
            if (!present) pts.push_back(j);
        }
        std::sort(pts.begin(), pts.end(),
                  [](const PiAffine& x, const PiAffine& y) { return x.approx() < y.approx(); });

        bool ok = true;
        for (size_t i = 0; i + 1 < pts.size() && ok; ++i) {
            BCPair bc{i == 0 ? p.bc.left : BC::Neumann,
                      i + 2 == pts.size() ? p.bc.right : BC::Neumann};
            EnclosureList e = crude_enclosure(p.sub(pts[i], pts[i + 1], bc), Eprime);
            if (!e.disjoint) ok = false;
        }
        if (ok) return {std::move(pts), n};
    }
    throw DepthExceeded("no uniform partition depth gives disjoint crude enclosures");
}

double adaptive_bisection_point(double alpha, double beta,
                                const std::vector<double>& critical_points) {
    double len = beta - alpha;
    int pcount = int(critical_points.size());
    if (pcount == 0) return alpha + 0.5 * len;
    double dmin = len / (4.0 * pcount);
    double step = len / (8.0 * pcount);
    double best = alpha + 0.5 * len;
    double best_dist = -1.0;
    for (double g = alpha + 0.25 * len; g <= alpha + 0.75 * len + 0.25 * step; g += step) {
        double dist = std::numeric_limits<double>::infinity();
        for (double c : critical_points) dist = std::min(dist, std::abs(g - c));
        if (dist >= dmin) return g;  // leftmost admissible
        if (dist > best_dist) {
            best_dist = dist;
            best = g;
        }
    }
    return best;
}

EnclosureList merge_interlace(const EnclosureList& left, const EnclosureList& right) {
    EnclosureList out;
    out.ceiling = std::min(left.ceiling, right.ceiling);
    out.disjoint = false;
    if (left.entries.empty() || right.entries.empty()) {
        out.entries = left.entries.empty() ? right.entries : left.entries;
        out.disjoint = left.entries.empty() ? right.disjoint : left.disjoint;
        return out;
    }
    std::vector<double> los, his;
    for (const Interval& v : left.entries) los.push_back(v.lo), his.push_back(v.hi);
    for (const Interval& v : right.entries) los.push_back(v.lo), his.push_back(v.hi);
    std::sort(los.begin(), los.end());
    std::sort(his.begin(), his.end());
    // component list sigma_i = [los[i], his[i]] (order statistics); the
    // joined operator's nu_i lies in [sigma_i.lo, sigma_{i+1}.hi]
    size_t m = los.size();
    out.entries.resize(m);
    for (size_t i = 0; i < m; ++i) {
        double hi = (i + 1 < m) ? his[i + 1] : std::numeric_limits<double>::infinity();
        out.entries[i] = Interval(los[i], hi);
    }
    return out;
}

}  // namespace enclose

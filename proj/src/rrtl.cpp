#include "enclose/rrtl.hpp"

#include <algorithm>
#include <cmath>

namespace enclose {

std::vector<Interval> rr_upper(const GramTriple& g, int k) {
    if (k > g.dim()) k = g.dim();
    EigEnclosure enc = verified_gen_eig(g.m1, g.m0);
    return {enc.values.begin(), enc.values.begin() + k};
}

namespace {

// quadratic form v^T M v in interval arithmetic, point vector
Interval form_value(const IntervalMatrix& m, const std::vector<double>& v) {
    int n = m.rows();
    Interval acc(0.0);
    for (int i = 0; i < n; ++i) {
        Interval row(0.0);
        for (int j = 0; j < n; ++j) row += m.at(i, j) * Interval(v[j]);
        acc += Interval(v[i]) * row;
    }
    return acc;
}

std::vector<double> pencil_vector(const GramTriple& g, int index) {
    ApproxEig ap = approx_gen_eig(g.m1.midpoint(), g.m0.midpoint(), g.dim());
    std::vector<double> v(g.dim());
    for (int i = 0; i < g.dim(); ++i) v[i] = ap.vectors[size_t(index) * g.dim() + i];
    return v;
}

Interval temple_with_vector(const GramTriple& g, const std::vector<double>& v,
                            const Interval& rho) {
    Interval f2 = form_value(g.m0, v);
    if (!f2.strictly_positive()) throw GapViolated("test vector has no certified norm");
    Interval q = form_value(g.m1, v) / f2;
    Interval r = form_value(g.m2, v) / f2;
    if (!(rho.lo > q.hi)) throw GapViolated("rho does not exceed the Rayleigh quotient");
    return (q * rho - r) / (rho - q);
}

}  // namespace

Interval temple_lower(const GramTriple& g, int test_vector_index, const Interval& rho) {
    if (!g.has_m2) throw GapViolated("no operator-domain Gram data for Temple bounds");
    if (test_vector_index < 0 || test_vector_index >= g.dim())
        throw DomainError("test vector index out of range");
    return temple_with_vector(g, pencil_vector(g, test_vector_index), rho);
}

std::vector<Interval> lehmann_lower(const GramTriple& g, const Interval& rho, int k) {
    if (!g.has_m2) throw GapViolated("no operator-domain Gram data for Lehmann bounds");
    if (k < 1 || k > g.dim()) throw DomainError("Lehmann block size out of range");
    Interval rho2 = rho * rho;
    IntervalMatrix a1 = g.m1 - rho * g.m0;
    // subtract rho*m1 twice rather than forming 2*rho to keep symmetry exact
    IntervalMatrix a2 = g.m2 - rho * g.m1 - rho * g.m1 + rho2 * g.m0;
    a1.symmetrize();
    a2.symmetrize();
    EigEnclosure taus = verified_gen_eig(a1, a2);  // throws NotPositiveDefinite
    std::vector<Interval> out(k, Interval(-std::numeric_limits<double>::infinity(), 0.0));
    for (int j = 0; j < k; ++j) {
        const Interval& tau = taus.values[j];
        if (!(tau.hi < 0.0))
            throw GapViolated("Lehmann pencil eigenvalue not certified negative");
        Interval bound = rho + Interval(1.0) / tau;
        out[k - 1 - j] = bound;  // j-th most negative tau bounds the j-th largest
    }
    return out;
}

RefineReport rrtl_refine(EnclosureList& list, const GramTriple& g) {
    RefineReport rep;
    int m = list.size();
    if (m == 0) {
        rep.disjoint = true;
        return rep;
    }

    // upper bounds
    std::vector<Interval> uppers = rr_upper(g, std::min(m, g.dim()));
    for (int i = 0; i < int(uppers.size()); ++i) {
        double u = uppers[i].hi;
        if (u < list.entries[i].lo) {
            // numerically inconsistent rough data
            rep.failed_index = i;
            rep.reason = "upper bound fell below certified lower bound";
            return rep;
        }
        list.entries[i] = Interval(list.entries[i].lo, std::min(list.entries[i].hi, u));
    }

    if (g.has_m2) {
        std::vector<double> vecs;
        {
            ApproxEig ap = approx_gen_eig(g.m1.midpoint(), g.m0.midpoint(), g.dim());
            vecs = std::move(ap.vectors);
        }
        auto vector_for = [&](int i) {
            std::vector<double> v(g.dim());
            for (int j = 0; j < g.dim(); ++j) v[j] = vecs[size_t(i) * g.dim() + j];
            return v;
        };

        for (int i = m - 1; i >= 0; --i) {
            double rho_pt = list.lower_bound_above(i);
            bool improved = false;
            if (rho_pt > list.entries[i].lo && i < g.dim()) {
                try {
                    Interval b = temple_with_vector(g, vector_for(i), Interval(rho_pt));
                    double lo = std::min(b.lo, list.entries[i].hi);
                    if (lo > list.entries[i].lo) {
                        list.entries[i] = Interval(lo, list.entries[i].hi);
                        improved = true;
                    }
                } catch (const GapViolated&) {
                }
            }
            if (improved) continue;
            // Lehmann escalation over blocks ending above i
            for (int bs = 2; bs <= 3 && !improved; ++bs) {
                int top = i + bs - 1;
                if (top >= m || top >= g.dim()) break;
                double rho_b = list.lower_bound_above(top);
                if (!(rho_b > list.entries[i].lo)) continue;
                double old_lo = list.entries[i].lo;
                try {
                    std::vector<Interval> bounds = lehmann_lower(g, Interval(rho_b), bs);
                    for (int j = 0; j < bs; ++j) {
                        int idx = i + j;
                        double lo = std::min(bounds[j].lo, list.entries[idx].hi);
                        if (lo > list.entries[idx].lo)
                            list.entries[idx] = Interval(lo, list.entries[idx].hi);
                    }
                    improved = list.entries[i].lo > old_lo;
                } catch (const Error&) {
                }
            }
        }
    }

    rep.disjoint = list.pairwise_disjoint();
    list.disjoint = rep.disjoint;
    return rep;
}

}  // namespace enclose

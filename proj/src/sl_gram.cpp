#include "enclose/sl_gram.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace enclose {

namespace {

IvPoly monomials(std::initializer_list<std::pair<int, double>> terms) {
    int deg = 0;
    for (auto& t : terms) deg = std::max(deg, t.first);
    std::vector<Interval> c(size_t(deg) + 1, Interval(0.0));
    for (auto& t : terms) c[t.first] += Interval(t.second);
    return IvPoly(std::move(c));
}

// cubic Hermite shapes on [-1,1]; all coefficients are quarters, exact
IvPoly shape_value_left() { return monomials({{0, 0.5}, {1, -0.75}, {3, 0.25}}); }
IvPoly shape_slope_left() { return monomials({{0, 0.25}, {1, -0.25}, {2, -0.25}, {3, 0.25}}); }
IvPoly shape_value_right() { return monomials({{0, 0.5}, {1, 0.75}, {3, -0.25}}); }
IvPoly shape_slope_right() { return monomials({{0, -0.25}, {1, -0.25}, {2, 0.25}, {3, 0.25}}); }
// interior bubbles t^j (1-t^2)^2, zero value and slope at both ends
IvPoly shape_bubble(int j) {
    return monomials({{j, 1.0}, {j + 2, -2.0}, {j + 4, 1.0}});
}

}  // namespace

std::vector<IvPoly> constrained_poly_basis(BCPair bc, int degree) {
    std::vector<IvPoly> out;
    bool dl = bc.left == BC::Dirichlet, dr = bc.right == BC::Dirichlet;
    if (!dl && !dr) {
        out.push_back(monomials({{0, 1.0}}));
        for (int j = 0; j + 3 <= degree; ++j)
            out.push_back(monomials({{j + 1, double(j + 3)}, {j + 3, -double(j + 1)}}));
    } else if (dl && dr) {
        for (int j = 0; j + 2 <= degree; ++j)
            out.push_back(monomials({{j, 1.0}, {j + 2, -1.0}}));
    } else if (dl && !dr) {
        // with h_j = t^j + t^{j+1} (zero at -1), (2j+3) h_j - (2j+1) h_{j+1}
        // kills the derivative at +1
        for (int j = 0; j + 2 <= degree; ++j) {
            double a = 2.0 * j + 3.0, b = 2.0 * j + 1.0;
            out.push_back(monomials({{j, a}, {j + 1, a - b}, {j + 2, -b}}));
        }
    } else {
        std::vector<IvPoly> mirrored = constrained_poly_basis({BC::Dirichlet, BC::Neumann}, degree);
        for (IvPoly p : mirrored) {
            for (size_t k = 1; k < p.c.size(); k += 2) p.c[k] = Interval(-1.0) * p.c[k];
            out.push_back(std::move(p));
        }
    }
    return out;
}

namespace {

struct Mesh {
    std::vector<PiAffine> joints;              // element boundaries, ascending
    std::vector<bool> slope_dof;               // per interior joint
};

Mesh build_mesh(const SLProblem& cell, int min_elements) {
    // segment boundaries: coefficient breaks inside the cell
    std::vector<PiAffine> segs = {cell.domain_lo};
    auto add_breaks = [&](const CoefficientFn& f) {
        for (const PiAffine& b : f.interior_breaks(cell.domain_lo, cell.domain_hi)) {
            bool dup = false;
            for (const PiAffine& c : segs)
                if (std::abs(c.approx() - b.approx()) < 1e-13) dup = true;
            if (!dup) segs.push_back(b);
        }
    };
    add_breaks(cell.a);
    add_breaks(cell.V);
    segs.push_back(cell.domain_hi);
    std::sort(segs.begin(), segs.end(),
              [](const PiAffine& x, const PiAffine& y) { return x.approx() < y.approx(); });

    double total = cell.domain_hi.approx() - cell.domain_lo.approx();
    Mesh mesh;
    mesh.joints.push_back(segs.front());
    for (size_t s = 0; s + 1 < segs.size(); ++s) {
        double frac = (segs[s + 1].approx() - segs[s].approx()) / total;
        int want = std::max(1, int(std::lround(frac * min_elements)));
        int k = 1;
        while (k < want) k *= 2;  // power-of-two split keeps halving exact
        std::vector<PiAffine> pts = {segs[s], segs[s + 1]};
        while (int(pts.size()) - 1 < k) {
            std::vector<PiAffine> next;
            for (size_t i = 0; i + 1 < pts.size(); ++i) {
                next.push_back(pts[i]);
                next.push_back(midpoint(pts[i], pts[i + 1]));
            }
            next.push_back(pts.back());
            pts = std::move(next);
        }
        for (size_t i = 1; i < pts.size(); ++i) mesh.joints.push_back(pts[i]);
    }

    int elements = int(mesh.joints.size()) - 1;
    mesh.slope_dof.assign(std::max(0, elements - 1), false);
    bool a_smooth = cell.a.interior_breaks(cell.domain_lo, cell.domain_hi).empty();
    for (int j = 0; j + 1 < elements; ++j) {
        const PiAffine &a = mesh.joints[j], &b = mesh.joints[j + 1], &c = mesh.joints[j + 2];
        bool equal_len = (b.plain - a.plain) == (c.plain - b.plain) &&
                         (b.pi_coeff - a.pi_coeff) == (c.pi_coeff - b.pi_coeff);
        bool at_break = false;
        for (const PiAffine& br : cell.a.interior_breaks(cell.domain_lo, cell.domain_hi))
            if (std::abs(br.approx() - b.approx()) < 1e-13) at_break = true;
        (void)a_smooth;
        // the x-derivative of the slope shapes matches across equal elements;
        // at a jump of a(x) the slope dof is dropped so (a f')(joint) = 0
        mesh.slope_dof[j] = equal_len && !at_break;
    }
    return mesh;
}

struct Dof {
    // (element, local shape) pairs with weights 1; slope dofs span two
    std::vector<ShapePiece> pieces;
};

GramTriple assemble_fem(const SLProblem& cell, int degree, int min_elements) {
    if (degree < 4) degree = 4;
    Mesh mesh = build_mesh(cell, min_elements);
    int elements = int(mesh.joints.size()) - 1;

    std::vector<Dof> dofs;
    // left endpoint
    if (cell.bc.left == BC::Neumann)
        dofs.push_back({{{0, shape_value_left()}}});
    else
        dofs.push_back({{{0, shape_slope_left()}}});
    // interior joints
    for (int j = 0; j + 1 < elements; ++j) {
        dofs.push_back({{{j, shape_value_right()}, {j + 1, shape_value_left()}}});
        if (mesh.slope_dof[j])
            dofs.push_back({{{j, shape_slope_right()}, {j + 1, shape_slope_left()}}});
    }
    // right endpoint
    if (cell.bc.right == BC::Neumann)
        dofs.push_back({{{elements - 1, shape_value_right()}}});
    else
        dofs.push_back({{{elements - 1, shape_slope_right()}}});
    // bubbles
    for (int e = 0; e < elements; ++e)
        for (int j = 0; j + 4 <= degree; ++j) dofs.push_back({{{e, shape_bubble(j)}}});

    int n = int(dofs.size());
    GramTriple g;
    g.m0 = IntervalMatrix(n, n);
    g.m1 = IntervalMatrix(n, n);
    g.m2 = IntervalMatrix(n, n);
    g.has_m2 = true;
    g.joints = mesh.joints;

    // per element: local coefficient data and the dofs supported there
    for (int e = 0; e < elements; ++e) {
        const PiAffine &lo = mesh.joints[e], &hi = mesh.joints[e + 1];
        TrigPoly a_t = cell.a.on_cell(lo, hi);
        TrigPoly v_t = cell.V.on_cell(lo, hi);
        Interval h = length_between(lo, hi) * Interval(0.5);
        Interval inv_h2 = Interval(1.0) / (h * h);

        std::vector<std::pair<int, const IvPoly*>> local;  // (dof index, shape)
        for (int d = 0; d < n; ++d)
            for (const ShapePiece& sp : dofs[d].pieces)
                if (sp.element == e) local.emplace_back(d, &sp.p);

        std::vector<TrigPoly> f(local.size()), df(local.size()), hf(local.size());
        for (size_t i = 0; i < local.size(); ++i) {
            f[i] = TrigPoly::poly(*local[i].second);
            df[i] = f[i].derivative();
            TrigPoly af = a_t * df[i];
            hf[i] = Interval(-1.0) * (inv_h2 * af.derivative()) + v_t * f[i];
        }
        for (size_t i = 0; i < local.size(); ++i) {
            for (size_t j = i; j < local.size(); ++j) {
                Interval m0 = (f[i] * f[j]).integrate(Interval(-1.0), Interval(1.0));
                TrigPoly form = inv_h2 * (a_t * (df[i] * df[j])) + v_t * (f[i] * f[j]);
                Interval m1 = form.integrate(Interval(-1.0), Interval(1.0));
                Interval m2 = (hf[i] * hf[j]).integrate(Interval(-1.0), Interval(1.0));
                int di = local[i].first, dj = local[j].first;
                g.m0.at(di, dj) += h * m0;
                g.m1.at(di, dj) += h * m1;
                g.m2.at(di, dj) += h * m2;
                if (di != dj) {
                    g.m0.at(dj, di) = g.m0.at(di, dj);
                    g.m1.at(dj, di) = g.m1.at(di, dj);
                    g.m2.at(dj, di) = g.m2.at(di, dj);
                }
            }
        }
    }

    // diagonal conditioning scale (exact doubles, harmless congruence)
    g.dof_scale.resize(n);
    for (int d = 0; d < n; ++d) {
        double m = g.m0.at(d, d).mid();
        g.dof_scale[d] = m > 0.0 ? 1.0 / std::sqrt(m) : 1.0;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Interval s = Interval(g.dof_scale[i]) * Interval(g.dof_scale[j]);
            g.m0.at(i, j) = s * g.m0.at(i, j);
            g.m1.at(i, j) = s * g.m1.at(i, j);
            g.m2.at(i, j) = s * g.m2.at(i, j);
        }
    g.m0.symmetrize();
    g.m1.symmetrize();
    g.m2.symmetrize();

    g.shapes.resize(n);
    for (int d = 0; d < n; ++d) {
        for (const ShapePiece& sp : dofs[d].pieces) {
            ShapePiece scaled = sp;
            scaled.p = Interval(g.dof_scale[d]) * scaled.p;
            g.shapes[d].push_back(std::move(scaled));
        }
    }
    g.descriptor = "piecewise degree " + std::to_string(degree) + ", " +
                   std::to_string(elements) + " elements";
    return g;
}

}  // namespace

GramTriple assemble_gram(const SLProblem& cell, std::vector<TrigPoly> basis) {
    int n = int(basis.size());
    GramTriple g;
    g.m0 = IntervalMatrix(n, n);
    g.m1 = IntervalMatrix(n, n);
    g.m2 = IntervalMatrix(n, n);
    g.has_m2 = cell.a.interior_breaks(cell.domain_lo, cell.domain_hi).empty();

    TrigPoly a_t = cell.a.on_cell(cell.domain_lo, cell.domain_hi);
    TrigPoly v_t = cell.V.on_cell(cell.domain_lo, cell.domain_hi);
    Interval h = length_between(cell.domain_lo, cell.domain_hi) * Interval(0.5);
    Interval inv_h2 = Interval(1.0) / (h * h);

    std::vector<TrigPoly> df(n), hf(n);
    for (int i = 0; i < n; ++i) {
        df[i] = basis[i].derivative();
        if (g.has_m2) {
            TrigPoly af = a_t * df[i];
            hf[i] = Interval(-1.0) * (inv_h2 * af.derivative()) + v_t * basis[i];
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            g.m0.at(i, j) = h * (basis[i] * basis[j]).integrate(Interval(-1.0), Interval(1.0));
            TrigPoly form = inv_h2 * (a_t * (df[i] * df[j])) + v_t * (basis[i] * basis[j]);
            g.m1.at(i, j) = h * form.integrate(Interval(-1.0), Interval(1.0));
            if (g.has_m2)
                g.m2.at(i, j) = h * (hf[i] * hf[j]).integrate(Interval(-1.0), Interval(1.0));
            if (i != j) {
                g.m0.at(j, i) = g.m0.at(i, j);
                g.m1.at(j, i) = g.m1.at(i, j);
                g.m2.at(j, i) = g.m2.at(i, j);
            }
        }
    g.m0.symmetrize();
    g.m1.symmetrize();
    g.m2.symmetrize();
    g.basis = std::move(basis);
    g.descriptor = "explicit basis";
    verify_spd(g.m0);
    return g;
}

GramTriple assemble_gram(const SLProblem& cell, int degree, int min_elements) {
    GramTriple g = assemble_fem(cell, degree, std::max(1, min_elements));
    verify_spd(g.m0);
    return g;
}

}  // namespace enclose

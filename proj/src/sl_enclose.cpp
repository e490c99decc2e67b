#include "enclose/sl_enclose.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "enclose/rrtl.hpp"

#ifdef ENCLOSE_HAVE_OPENMP
#include <omp.h>
#endif

namespace enclose {

int EffortReport::total_operators() const {
    int s = 0;
    for (const auto& l : per_level) s += l.operators;
    return s;
}
int EffortReport::total_eigenvalues() const {
    int s = 0;
    for (const auto& l : per_level) s += l.eigenvalues;
    return s;
}

std::string format_effort(const EffortReport& e) {
    std::ostringstream os;
    os << e.total_operators() << " operators over " << e.level_count() << " levels, "
       << e.total_eigenvalues() << " eigenvalues (";
    for (size_t i = 0; i < e.per_level.size(); ++i) {
        if (i) os << " + ";
        os << e.per_level[i].eigenvalues;
    }
    os << ", leaves first)";
    return os.str();
}

namespace {

struct TreeNode {
    PiAffine lo, hi;
    int left_child = -1, right_child = -1;  // indices into the previous level
    int leaf_count = 1;
};

BCPair node_bc(const SLProblem& p, const PiAffine& lo, const PiAffine& hi) {
    bool at_left = lo == p.domain_lo;
    bool at_right = hi == p.domain_hi;
    return {at_left ? p.bc.left : BC::Neumann, at_right ? p.bc.right : BC::Neumann};
}

// Raise per-index lower bounds and the ceiling with the node's own
// constant-coefficient comparison bounds; they need no disjointness.
void apply_crude_floor(const SLProblem& cell, EnclosureList& list) {
    std::vector<double> lows = crude_lower_bounds(cell, list.size() + 1);
    for (int i = 0; i < list.size(); ++i) {
        double lo = std::min(std::max(list.entries[i].lo, lows[i]), list.entries[i].hi);
        list.entries[i] = Interval(lo, list.entries[i].hi);
    }
    list.ceiling = std::max(list.ceiling, lows[list.size()]);
}

// Drop trailing entries whose certified lower bound exceeds the retention
// ceiling; completeness is preserved by lowering the list ceiling to the
// first dropped bound.
void retain_below(EnclosureList& list, double retention) {
    while (!list.entries.empty() && list.entries.back().lo > retention) {
        list.ceiling = std::min(list.ceiling, list.entries.back().lo);
        list.entries.pop_back();
    }
}

struct NodeOutcome {
    EnclosureList list;
    std::optional<HaltInfo> halt;
    std::string error;
};

}  // namespace

std::vector<double> approx_critical_points(const SLProblem& p, double E, int basis_degree) {
    GramTriple g = assemble_gram(p, basis_degree);
    ApproxEig ap = approx_gen_eig(g.m1.midpoint(), g.m0.midpoint(), g.dim());
    std::vector<double> crit;
    double mid = 0.5 * (p.domain_lo.approx() + p.domain_hi.approx());
    double half = 0.5 * (p.domain_hi.approx() - p.domain_lo.approx());
    std::vector<TrigPoly> deriv(g.dim());
    for (int b = 0; b < g.dim(); ++b) deriv[b] = g.basis[b].derivative();
    for (int k = 0; k < g.dim(); ++k) {
        if (ap.values[k] > E) break;
        // derivative of the approximate eigenfunction on a fine grid
        const int samples = 512;
        double prev = 0.0;
        bool have_prev = false;
        for (int s = 0; s <= samples; ++s) {
            double t = -1.0 + 2.0 * double(s) / samples;
            double d = 0.0;
            for (int b = 0; b < g.dim(); ++b) {
                double coef = ap.vectors[size_t(k) * g.dim() + b];
                if (coef == 0.0) continue;
                d += coef * deriv[b].eval(Interval(t)).mid();
            }
            if (have_prev && prev * d < 0.0)
                crit.push_back(mid + half * (t - 1.0 / samples));
            if (d != 0.0) {
                prev = d;
                have_prev = true;
            }
        }
    }
    std::sort(crit.begin(), crit.end());
    return crit;
}

namespace {

Partition adaptive_partition(const SLProblem& p, double Eprime, const SlOptions& opt) {
    std::vector<double> crit = approx_critical_points(p, Eprime, opt.basis_degree);
    std::vector<PiAffine> pts = {p.domain_lo, p.domain_hi};
    for (int level = 0; level <= opt.max_level; ++level) {
        bool all_ok = true;
        std::vector<PiAffine> next;
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            next.push_back(pts[i]);
            BCPair bc = node_bc(p, pts[i], pts[i + 1]);
            EnclosureList e = crude_enclosure(p.sub(pts[i], pts[i + 1], bc), Eprime);
            if (!e.disjoint) {
                all_ok = false;
                double a = pts[i].approx(), b = pts[i + 1].approx();
                std::vector<double> local;
                for (double c : crit)
                    if (c > a && c < b) local.push_back(c);
                next.push_back(PiAffine(adaptive_bisection_point(a, b, local)));
            }
        }
        next.push_back(pts.back());
        if (all_ok) {
            int n = std::max(1, int(std::ceil(std::log2(double(pts.size() - 1)))));
            return {std::move(pts), n};
        }
        pts = std::move(next);
    }
    throw DepthExceeded("adaptive subdivision did not reach disjoint crude enclosures");
}

}  // namespace

SlResult hierarchical_enclose(const SLProblem& p, double E, const SlOptions& opt) {
    SlResult res;
    double eprime = opt.Eprime > E ? opt.Eprime : 9.0 * E / 8.0;

    // Stage: choose the subdivision and ceiling schedule together (the
    // leaf requirement depends on the level count).
    Partition part;
    if (opt.forced_level >= 0) {
        Schedule probe(E, eprime, std::max(opt.forced_level, 1));
        part = uniform_partition(p, probe.level(opt.forced_level + 1), opt.max_level);
        // honor the forced depth even if a smaller one would do
        while (part.level < opt.forced_level) {
            std::vector<PiAffine> pts;
            for (size_t i = 0; i + 1 < part.points.size(); ++i) {
                pts.push_back(part.points[i]);
                pts.push_back(midpoint(part.points[i], part.points[i + 1]));
            }
            pts.push_back(part.points.back());
            part = {std::move(pts), part.level + 1};
        }
    } else if (opt.adaptive) {
        part = adaptive_partition(p, eprime, opt);
    } else {
        part = uniform_partition(p, eprime, opt.max_level);
        for (;;) {
            Schedule probe(E, eprime, part.level);
            Partition refreshed = uniform_partition(p, probe.level(part.level + 1), opt.max_level);
            if (refreshed.level <= part.level) break;  // current depth still valid
            part = refreshed;
        }
    }
    Schedule sched(E, eprime, part.level);
    res.partition = part;
    res.schedule = sched;

    // Build the pairing tree: leaves are the partition cells, parents join
    // adjacent children (an odd node is promoted unchanged).
    std::vector<std::vector<TreeNode>> levels;  // levels[0] = leaves
    {
        std::vector<TreeNode> cur;
        for (size_t i = 0; i + 1 < part.points.size(); ++i)
            cur.push_back({part.points[i], part.points[i + 1], -1, -1, 1});
        levels.push_back(cur);
        while (levels.back().size() > 1) {
            const auto& prev = levels.back();
            std::vector<TreeNode> up;
            for (size_t i = 0; i < prev.size(); i += 2) {
                if (i + 1 < prev.size())
                    up.push_back({prev[i].lo, prev[i + 1].hi, int(i), int(i + 1),
                                  prev[i].leaf_count + prev[i + 1].leaf_count});
                else
                    up.push_back({prev[i].lo, prev[i].hi, int(i), -1, prev[i].leaf_count});
            }
            levels.push_back(std::move(up));
        }
    }
    int depth_count = int(levels.size());
    res.effort.per_level.resize(depth_count);
    res.per_level.resize(depth_count);

    std::vector<EnclosureList> below;  // certified lists of the previous level
    for (int li = 0; li < depth_count; ++li) {
        const auto& nodes = levels[li];
        // ceiling stage: leaves sit at depth N, the root at 0
        int stage = std::min(depth_count - 1 - li, sched.N);
        double accurate_ceiling = sched.level(stage);
        double crude_ceiling = sched.level(std::min(stage + 1, sched.N + 1));

        std::vector<NodeOutcome> outcomes(nodes.size());
        auto process_node = [&](int ni) {
            NodeOutcome& out = outcomes[ni];
            try {
                const TreeNode& nd = nodes[ni];
                SLProblem cell = p.sub(nd.lo, nd.hi, node_bc(p, nd.lo, nd.hi));
                if (li == 0) {
                    out.list = crude_enclosure(cell, crude_ceiling);
                    if (!out.list.disjoint) {
                        out.halt = HaltInfo{stage, ni, 0, "leaf crude enclosures not disjoint"};
                        return;
                    }
                } else if (nd.right_child < 0) {
                    out.list = below[nd.left_child];  // promoted node, nothing to join
                    return;
                } else {
                    out.list = merge_interlace(below[nd.left_child], below[nd.right_child]);
                }
                apply_crude_floor(cell, out.list);
                retain_below(out.list, accurate_ceiling);
                if (out.list.entries.empty()) return;

                GramTriple g = assemble_gram(cell, opt.basis_degree,
                                             opt.elements_per_leaf * nd.leaf_count);
                RefineReport rep = rrtl_refine(out.list, g);
                retain_below(out.list, accurate_ceiling);
                if (!out.list.pairwise_disjoint()) {
                    int bad = rep.failed_index.value_or(0);
                    for (int i = 0; i + 1 < out.list.size(); ++i)
                        if (!(out.list.entries[i].hi < out.list.entries[i + 1].lo)) bad = i;
                    out.halt = HaltInfo{stage, ni, bad,
                                        rep.reason.empty() ? "enclosures not separable" : rep.reason};
                }
            } catch (const Error& e) {
                out.error = e.what();
            }
        };
        int nt = worker_threads();
#ifdef ENCLOSE_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, nt)) if (nt > 1)
#endif
        for (int ni = 0; ni < int(nodes.size()); ++ni) process_node(ni);

        std::vector<EnclosureList> current;
        for (int ni = 0; ni < int(nodes.size()); ++ni) {
            NodeOutcome& out = outcomes[ni];
            if (out.halt && !res.halt) res.halt = out.halt;
            if (!out.error.empty() && !res.halt)
                res.halt = HaltInfo{stage, ni, 0, out.error};
            bool counted = li == 0 || nodes[ni].right_child >= 0;
            res.effort.per_level[li].operators += counted ? 1 : 0;
            res.effort.per_level[li].eigenvalues += counted ? out.list.size() : 0;
            current.push_back(std::move(out.list));
        }
        res.per_level[li] = current;
        if (res.halt) return res;
        below = std::move(current);
    }

    res.final_list = below.front();
    retain_below(res.final_list, E);
    res.final_list.disjoint = res.final_list.pairwise_disjoint();
    return res;
}

}  // namespace enclose

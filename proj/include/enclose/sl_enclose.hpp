#pragma once

#include <optional>
#include <string>
#include <vector>

#include "enclose/enclosure_list.hpp"
#include "enclose/sl_gram.hpp"
#include "enclose/sl_problem.hpp"

namespace enclose {

struct HaltInfo {
    int level = 0;      // tree depth (0 = root)
    int node = 0;       // node index within the level
    int eig_index = 0;  // offending eigenvalue pair, when applicable
    std::string reason;
};

struct LevelEffort {
    int operators = 0;
    int eigenvalues = 0;
};

struct EffortReport {
    std::vector<LevelEffort> per_level;  // leaves first
    int total_operators() const;
    int total_eigenvalues() const;
    int level_count() const { return int(per_level.size()); }
};

struct SlOptions {
    double Eprime = 0.0;       // ceiling headroom; defaults to 9E/8
    int basis_degree = 8;      // per-element polynomial degree
    int elements_per_leaf = 2; // mesh density of the test spaces
    int max_level = 14;
    int forced_level = -1;   // fix the subdivision depth (testing)
    bool adaptive = false;   // eigenfunction-aware bisection points
};

struct SlResult {
    EnclosureList final_list;  // certified enclosures below E (empty on halt)
    std::optional<HaltInfo> halt;
    EffortReport effort;
    Partition partition;
    Schedule schedule;
    // node lists per tree depth, root last; on a halt these are the deepest
    // certified (still rigorous) partial results
    std::vector<std::vector<EnclosureList>> per_level;
};

// Full enclosure driver: choose a subdivision whose cells have disjoint
// constant-coefficient enclosures, walk the pairing tree from the leaves
// to the root, and at each node merge the children's certified lists,
// sharpen them with node-level crude bounds, and certify with RR upper
// bounds plus Temple/Lehmann lower bounds against the level ceiling.
// Nodes within one level are processed concurrently.
SlResult hierarchical_enclose(const SLProblem& p, double E, const SlOptions& opt = {});

// Effort summary helpers ("how much was computed").
std::string format_effort(const EffortReport& e);

// Approximate (floating point, non-rigorous) critical points of the first
// eigenfunctions, used by the adaptive subdivision option.
std::vector<double> approx_critical_points(const SLProblem& p, double E, int basis_degree);

}  // namespace enclose

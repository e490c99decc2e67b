#pragma once

#include <limits>
#include <vector>

#include "enclose/interval.hpp"

namespace enclose {

// Ordered list of eigenvalue enclosures, certified complete below `ceiling`:
// every eigenvalue of the associated operator below the ceiling lies in an
// entry, every eigenvalue not represented by an entry is >= ceiling, and
// entry i is a two-sided enclosure of the i-th listed eigenvalue.
struct EnclosureList {
    std::vector<Interval> entries;  // sorted by lower endpoint
    double ceiling = std::numeric_limits<double>::infinity();
    bool disjoint = false;

    int size() const { return int(entries.size()); }
    // Certified lower bound for the eigenvalue following entry i (the
    // next entry's lower endpoint, or the ceiling past the end).
    double lower_bound_above(int i) const {
        return i + 1 < size() ? entries[i + 1].lo : ceiling;
    }
    bool pairwise_disjoint() const {
        for (int i = 0; i + 1 < size(); ++i)
            if (!(entries[i].hi < entries[i + 1].lo)) return false;
        return true;
    }
};

// Rough enclosures for the operator obtained by joining the two component
// operators (dropping the internal boundary condition).  The joined
// eigenvalues nu interlace the merged component list sigma as
// sigma_i <= nu_i <= sigma_{i+1}, so entry i is [sigma_i.lo, sigma_{i+1}.hi].
// Order statistics of the endpoints are merged separately, which stays
// sound when component enclosures overlap.
EnclosureList merge_interlace(const EnclosureList& left, const EnclosureList& right);

}  // namespace enclose

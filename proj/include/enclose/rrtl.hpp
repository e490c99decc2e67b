#pragma once

#include <optional>
#include <string>

#include "enclose/enclosure_list.hpp"
#include "enclose/sl_gram.hpp"

namespace enclose {

struct GapViolated : Error {
    using Error::Error;
};

// Upper bounds: enclosures of the first k eigenvalues of the pencil
// (m1, m0); by the variational principle each upper endpoint bounds the
// corresponding operator eigenvalue from above.
std::vector<Interval> rr_upper(const GramTriple& g, int k);

// Temple bound: with q = <Hf,f>/<f,f> and r = <Hf,Hf>/<f,f> for the
// test vector with the given index (an approximate pencil eigenvector),
// and rho a verified lower bound of the next eigenvalue with rho > q,
//   (q rho - r)/(rho - q)
// is a rigorous lower bound of the largest eigenvalue below rho.
Interval temple_lower(const GramTriple& g, int test_vector_index, const Interval& rho);

// Simultaneous lower bounds for the k eigenvalues below rho via the pencil
// (m1 - rho m0) x = tau (m2 - 2 rho m1 + rho^2 m0) x: for each certified
// negative tau_j (ascending), the j-th largest eigenvalue below rho is
// >= rho + 1/tau_j.  Returned in ascending eigenvalue order.
std::vector<Interval> lehmann_lower(const GramTriple& g, const Interval& rho, int k);

// One certification pass over a rough list: upper bounds from rr_upper,
// lower bounds from temple_lower with Lehmann block escalation (sizes 2, 3)
// when the Temple gap fails.  Entries keep their rough bounds wherever a
// step does not improve them; all updates preserve rigor.  Returns the
// index of the first entry whose refinement failed outright, if any.
struct RefineReport {
    bool disjoint = false;
    std::optional<int> failed_index;
    std::string reason;
};
RefineReport rrtl_refine(EnclosureList& list, const GramTriple& g);

}  // namespace enclose

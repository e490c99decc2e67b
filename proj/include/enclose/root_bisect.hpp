#pragma once

#include <functional>

#include "enclose/interval.hpp"

namespace enclose {

struct NoSignChange : Error {
    using Error::Error;
};

struct RootEnclosure {
    Interval bracket;
    bool stalled = false;  // sign undecidable too often; bracket is best effort
    int iterations = 0;
};

// Verified bisection on a sign-evaluable function.  The bracket endpoints
// must have certified opposite signs under interval evaluation.  A probe
// whose sign cannot be certified is rejected and the probe point moved;
// after 200 consecutive rejections the current bracket is returned with
// the stall flag set.
RootEnclosure bisect_root(const std::function<Interval(const Interval&)>& f,
                          Interval bracket, double tol);

}  // namespace enclose

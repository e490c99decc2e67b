// Shared Sturm-Liouville test problems.
#pragma once

#include "enclose/sl_problem.hpp"

namespace fixtures {

using namespace enclose;

// -u'' + 8 cos(x)^2 u on (0, pi), Neumann ends; the potential is ingested
// as 4 + 4 cos(2x)
inline SLProblem cos_problem() {
    SLProblem p;
    p.domain_lo = PiAffine(0.0);
    p.domain_hi = PiAffine::pi();
    p.a = CoefficientFn::constant(1.0);
    p.V = CoefficientFn::single(
        {Term::poly(Interval(4.0), 0), Term::trig(Term::Cos, Interval(4.0), 2.0)});
    p.bc = {BC::Neumann, BC::Neumann};
    return p;
}

// -u'' + 1000 x u on (0, 1), Dirichlet ends
inline SLProblem airy_problem() {
    SLProblem p;
    p.domain_lo = PiAffine(0.0);
    p.domain_hi = PiAffine(1.0);
    p.a = CoefficientFn::constant(1.0);
    p.V = CoefficientFn::single({Term::poly(Interval(1000.0), 1)});
    p.bc = {BC::Dirichlet, BC::Dirichlet};
    return p;
}

// free Neumann problem -u'' on (0, pi): spectrum i^2
inline SLProblem free_problem() {
    SLProblem p;
    p.domain_lo = PiAffine(0.0);
    p.domain_hi = PiAffine::pi();
    p.a = CoefficientFn::constant(1.0);
    p.V = CoefficientFn{};
    p.bc = {BC::Neumann, BC::Neumann};
    return p;
}

}  // namespace fixtures

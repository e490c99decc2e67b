#include "enclose/root_bisect.hpp"

namespace enclose {

namespace {

enum class Sign { Negative, Positive, Unknown };

Sign sign_at(const std::function<Interval(const Interval&)>& f, double x) {
    Interval v = f(Interval(x));
    if (v.lo > 0.0) return Sign::Positive;
    if (v.hi < 0.0) return Sign::Negative;
    return Sign::Unknown;
}

}  // namespace

RootEnclosure bisect_root(const std::function<Interval(const Interval&)>& f,
                          Interval bracket, double tol) {
    Sign sl = sign_at(f, bracket.lo);
    Sign sr = sign_at(f, bracket.hi);
    if (sl == Sign::Unknown || sr == Sign::Unknown || sl == sr)
        throw NoSignChange("bisect_root: no certified sign change on bracket");

    RootEnclosure out;
    int stalls = 0;
    // probe offsets tried in turn when the midpoint sign is undecidable
    static const double offsets[] = {0.5, 0.375, 0.625, 0.4375, 0.5625, 0.25, 0.75};
    int probe = 0;
    while (bracket.width() > tol) {
        double x = bracket.lo + offsets[probe % 7] * bracket.width();
        if (!(bracket.lo < x && x < bracket.hi)) break;  // width at rounding floor
        ++out.iterations;
        Sign s = sign_at(f, x);
        if (s == Sign::Unknown) {
            ++probe;
            if (++stalls >= 200) {
                out.stalled = true;
                break;
            }
            continue;
        }
        stalls = 0;
        probe = 0;
        if (s == sl)
            bracket = Interval(x, bracket.hi);
        else
            bracket = Interval(bracket.lo, x);
    }
    out.bracket = bracket;
    return out;
}

}  // namespace enclose

#include "smoothdual/tempered.hpp"

#include <algorithm>

#include "smoothdual/errors.hpp"

namespace smoothdual {

namespace {

void restore_canonical_order(WDParam& p) {
    std::sort(p.segments.begin(), p.segments.end(),
              [](const SegmentParam& a, const SegmentParam& b) {
                  return segment_key(a) < segment_key(b);
              });
}

}  // namespace

bool is_tempered(const WDParam& p) {
    return std::all_of(p.segments.begin(), p.segments.end(),
                       [](const SegmentParam& seg) { return central_exponent(seg).is_zero(); });
}

WDParam retract(const WDParam& p) {
    WDParam out = p;
    for (SegmentParam& seg : out.segments)
        seg.twist = TwistCoord(Rational(1 - seg.length, 2), seg.twist.theta);
    restore_canonical_order(out);
    return out;
}

WDParam homotopy(const WDParam& p, const Rational& t) {
    if (t < Rational(0) || t > Rational(1))
        throw ValidationError("homotopy: t must lie in [0, 1], got " + t.str());
    WDParam out = p;
    for (SegmentParam& seg : out.segments) {
        const Rational scaled = (Rational(1) - t) * central_exponent(seg);
        seg.twist = TwistCoord(scaled - Rational(seg.length - 1, 2), seg.twist.theta);
    }
    restore_canonical_order(out);
    return out;
}

ComponentIndex stratum_of(const WDParam& p) { return alpha(p).component; }

}  // namespace smoothdual

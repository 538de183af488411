#include "smoothdual/params.hpp"

#include <algorithm>

#include "smoothdual/errors.hpp"
#include "smoothdual/laurent.hpp"

namespace smoothdual {

WDParam validated(WDParam p, const Inventory& inv) {
    long long total = 0;
    for (std::size_t i = 0; i < p.segments.size(); ++i) {
        SegmentParam& seg = p.segments[i];
        const std::string where = "segments[" + std::to_string(i) + "]";
        const CuspidalLabel* label = inv.find(seg.label);
        if (!label) throw ValidationError(where + ": unknown label '" + seg.label + "'");
        if (seg.length < 1) throw ValidationError(where + ": length must be >= 1");
        seg.twist = reduce_mod_torsion(seg.twist, label->torsion);
        total += static_cast<long long>(label->dim) * seg.length;
    }
    if (total != p.n)
        throw ValidationError("dimension mismatch: expected n = " + std::to_string(p.n) +
                              ", segments sum to " + std::to_string(total));
    std::sort(p.segments.begin(), p.segments.end(),
              [](const SegmentParam& a, const SegmentParam& b) {
                  return segment_key(a) < segment_key(b);
              });
    return p;
}

Rational central_exponent(const SegmentParam& seg) {
    return seg.twist.s + Rational(seg.length - 1, 2);
}

ExtendedPoint alpha(const WDParam& p) {
    ExtendedPoint x;
    for (const SegmentParam& seg : p.segments) {
        x.component[seg.label].push_back(seg.length);
        x.coordinates[{seg.label, seg.length}].push_back(seg.twist);
    }
    for (auto& [label, partition] : x.component)
        std::sort(partition.begin(), partition.end(), std::greater<int>());
    for (auto& [factor, twists] : x.coordinates) std::sort(twists.begin(), twists.end());
    return x;
}

namespace {

void sort_point(CuspidalPoint& c) {
    std::sort(c.levi.begin(), c.levi.end());
    std::sort(c.support.begin(), c.support.end());
}

}  // namespace

CuspidalPoint beta(const ExtendedPoint& x, const Inventory& inv) {
    CuspidalPoint c;
    for (const auto& [factor, twists] : x.coordinates) {
        const auto& [label, part] = factor;
        const int dim = inv.at(label).dim;
        for (const TwistCoord& z : twists)
            for (int i = 0; i < part; ++i) {
                c.support.emplace_back(label, z * norm_power(Rational(i)));
                c.levi.push_back(dim);
            }
    }
    sort_point(c);
    return c;
}

CuspidalPoint infinitesimal_character(const WDParam& p, const Inventory& inv) {
    CuspidalPoint c;
    for (const SegmentParam& seg : p.segments) {
        const int dim = inv.at(seg.label).dim;
        for (int i = 0; i < seg.length; ++i) {
            c.support.emplace_back(seg.label, seg.twist * norm_power(Rational(i)));
            c.levi.push_back(dim);
        }
    }
    sort_point(c);
    return c;
}

std::vector<SegmentParam> langlands_order(const WDParam& p) {
    std::vector<SegmentParam> order = p.segments;
    std::sort(order.begin(), order.end(), [](const SegmentParam& a, const SegmentParam& b) {
        const Rational ea = central_exponent(a);
        const Rational eb = central_exponent(b);
        if (ea != eb) return ea > eb;
        return std::tie(a.label, a.length, a.twist.theta) <
               std::tie(b.label, b.length, b.twist.theta);
    });
    return order;
}

bool equivalent(const WDParam& p, const WDParam& q) {
    return p.n == q.n && p.segments == q.segments;
}

bool sp_relation_holds(int r) {
    if (r < 1) throw std::invalid_argument("sp_relation_holds: r must be >= 1");
    LaurentMatrix rho = laurent_zeros(r, r);
    LaurentMatrix rho_inv = laurent_zeros(r, r);
    LaurentMatrix shift = laurent_zeros(r, r);
    for (int i = 0; i < r; ++i) {
        rho[i][i] = LaurentPoly::monomial(1, i);
        rho_inv[i][i] = LaurentPoly::monomial(1, -i);
        if (i + 1 < r) shift[i + 1][i] = LaurentPoly::monomial(1, 0);
    }
    const LaurentMatrix conjugated = matmul(matmul(rho, shift), rho_inv);
    return conjugated == scale(LaurentPoly::monomial(1, 1), shift);
}

}  // namespace smoothdual

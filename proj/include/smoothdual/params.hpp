#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "smoothdual/spectrum.hpp"
#include "smoothdual/twist.hpp"

namespace smoothdual {

// One indecomposable summand of a parameter: the cuspidal orbit `label`
// twisted by `twist`, tensored with the length-r special representation.
// The stored twist is the twist of the segment's first cuspidal, so the
// segment's cuspidals sit at exponents s, s+1, ..., s+r-1.
struct SegmentParam {
    std::string label;
    TwistCoord twist;
    int length = 1;

    friend bool operator==(const SegmentParam&, const SegmentParam&) = default;
};

// Canonical multiset order: by label, then length, then twist.
inline auto segment_key(const SegmentParam& s) { return std::tie(s.label, s.length, s.twist); }

// An admissible parameter up to equivalence: a multiset of segments of total
// dimension n. In canonical form segments are sorted by segment_key and each
// twist is reduced modulo its label's torsion.
struct WDParam {
    std::vector<SegmentParam> segments;
    int n = 0;

    friend bool operator==(const WDParam&, const WDParam&) = default;
};

// A point of the extended variety: a component index together with, for each
// (label, part size) factor, the multiset of twists carried by that factor.
// Coordinate multisets are kept sorted.
struct ExtendedPoint {
    ComponentIndex component;
    std::map<std::pair<std::string, int>, std::vector<TwistCoord>> coordinates;

    friend bool operator==(const ExtendedPoint&, const ExtendedPoint&) = default;
};

// A point of the Bernstein variety: the Levi block sizes together with the
// multiset of twisted cuspidals. Both vectors are kept sorted, so equality is
// equality of conjugacy classes of cuspidal pairs.
struct CuspidalPoint {
    std::vector<int> levi;
    std::vector<std::pair<std::string, TwistCoord>> support;

    friend bool operator==(const CuspidalPoint&, const CuspidalPoint&) = default;
};

// Checks every label against the inventory and the dimension count against n,
// reduces twists modulo torsion, and returns the canonical form. Throws
// ValidationError with the offending segment's position.
WDParam validated(WDParam p, const Inventory& inv);

// Average exponent of the segment's cuspidal chain: s + (r-1)/2. Zero exactly
// in the tempered normal form.
Rational central_exponent(const SegmentParam& seg);

// Sends a parameter to the extended variety: per label, the partition formed
// by its segment lengths; per (label, part size), the multiset of twists of
// those segments.
ExtendedPoint alpha(const WDParam& p);

// The twisted projection onto the Bernstein variety: a coordinate z on a
// factor of part size t expands to {z, z*| |, ..., z*| |^{t-1}}, and each
// expansion contributes t Levi blocks of size dim(label).
CuspidalPoint beta(const ExtendedPoint& x, const Inventory& inv);

// Cuspidal support computed segment by segment. Deliberately does not go
// through alpha or beta, so the two routes can be compared.
CuspidalPoint infinitesimal_character(const WDParam& p, const Inventory& inv);

// Display order of the segments in the Langlands quotient: non-increasing
// central exponent, ties broken by (label, length, angle).
std::vector<SegmentParam> langlands_order(const WDParam& p);

// Equality of canonical forms; both arguments must already be validated
// against the same inventory.
bool equivalent(const WDParam& p, const WDParam& q);

// Verifies rho(w) N rho(w)^{-1} = ||w|| N for the r-dimensional special
// representation, with rho(w) = diag(x^0, ..., x^{r-1}) and N the subdiagonal
// shift, as an exact identity of Laurent-polynomial matrices.
bool sp_relation_holds(int r);

}  // namespace smoothdual

#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "smoothdual/homology.hpp"
#include "smoothdual/params.hpp"
#include "smoothdual/spectrum.hpp"

namespace smoothdual {

using nlohmann::json;

// JSON is the sole interchange format. Object keys serialize in sorted order
// and every multiset is emitted in its canonical order, so identical values
// always produce identical bytes.
//
// Conventions: rationals are strings "p/q" (or "p" when q = 1); a twist is
// {"s": ..., "theta": ...}; a partition is a non-increasing array of ints.

json to_json(const Rational& r);
json to_json(const TwistCoord& z);
json to_json(const CuspidalLabel& label);
json to_json(const Inventory& inv);
json to_json(const InertialClass& cls);
json to_json(const ComponentIndex& index);
json to_json(const ComponentShape& shape);
json to_json(const SegmentParam& seg);
json to_json(const WDParam& p);
json to_json(const ExtendedPoint& x);
json to_json(const CuspidalPoint& c);
json to_json(const PoincarePolynomial& poly);

// Parsers throw ValidationError with the offending location, e.g.
// "inventory[2]: duplicate id 'chi'" or "segments[0].twist.s: not a rational".
Rational parse_rational(const json& j, const std::string& where);
TwistCoord parse_twist(const json& j, const std::string& where);
Inventory parse_inventory(const json& j);
WDParam parse_param(const json& j);

// File loaders; wrap read and JSON syntax errors in ValidationError.
Inventory load_inventory(const std::string& path);
WDParam load_param(const std::string& path);

json load_json_file(const std::string& path);

// Canonical rendering of a report: two-space indent, newline-terminated.
std::string render_report(const json& report);

}  // namespace smoothdual

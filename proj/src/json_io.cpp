#include "smoothdual/json_io.hpp"

#include <fstream>
#include <sstream>

#include "smoothdual/errors.hpp"

namespace smoothdual {

json to_json(const Rational& r) { return r.str(); }

json to_json(const TwistCoord& z) {
    return json{{"s", z.s.str()}, {"theta", z.theta.str()}};
}

json to_json(const CuspidalLabel& label) {
    return json{{"id", label.id}, {"dim", label.dim}, {"torsion", label.torsion}};
}

json to_json(const Inventory& inv) {
    json out = json::array();
    for (const CuspidalLabel& label : inv.labels()) out.push_back(to_json(label));
    return out;
}

json to_json(const InertialClass& cls) {
    json entries = json::object();
    for (const auto& [id, mult] : cls.entries) entries[id] = mult;
    return json{{"entries", entries}, {"n", cls.n}};
}

json to_json(const ComponentIndex& index) {
    json out = json::object();
    for (const auto& [label, partition] : index) out[label] = partition;
    return out;
}

json to_json(const ComponentShape& shape) {
    json out = json::array();
    for (const ShapeFactor& f : shape.factors) out.push_back(json::array({f.label, f.part, f.count}));
    return out;
}

json to_json(const SegmentParam& seg) {
    return json{{"label", seg.label}, {"twist", to_json(seg.twist)}, {"length", seg.length}};
}

json to_json(const WDParam& p) {
    json segments = json::array();
    for (const SegmentParam& seg : p.segments) segments.push_back(to_json(seg));
    return json{{"n", p.n}, {"segments", segments}};
}

json to_json(const ExtendedPoint& x) {
    json coordinates = json::array();
    for (const auto& [factor, twists] : x.coordinates) {
        json entry = json{{"label", factor.first}, {"part", factor.second}};
        json list = json::array();
        for (const TwistCoord& z : twists) list.push_back(to_json(z));
        entry["twists"] = list;
        coordinates.push_back(entry);
    }
    return json{{"component", to_json(x.component)}, {"coordinates", coordinates}};
}

json to_json(const CuspidalPoint& c) {
    json support = json::array();
    for (const auto& [label, z] : c.support) support.push_back(json::array({label, to_json(z)}));
    return json{{"levi", c.levi}, {"support", support}};
}

json to_json(const PoincarePolynomial& poly) { return poly.coefficients; }

Rational parse_rational(const json& j, const std::string& where) {
    if (!j.is_string()) throw ValidationError(where + ": expected a rational string");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ValidationError(where + ": " + e.what());
    }
}

TwistCoord parse_twist(const json& j, const std::string& where) {
    if (!j.is_object() || !j.contains("s") || !j.contains("theta"))
        throw ValidationError(where + ": expected an object with fields \"s\" and \"theta\"");
    return TwistCoord(parse_rational(j.at("s"), where + ".s"),
                      parse_rational(j.at("theta"), where + ".theta"));
}

namespace {

int parse_positive_int(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw ValidationError(where + ": expected an integer");
    const long long value = j.get<long long>();
    if (value < 1) throw ValidationError(where + ": must be >= 1");
    return static_cast<int>(value);
}

}  // namespace

Inventory parse_inventory(const json& j) {
    if (!j.is_array()) throw ValidationError("inventory: expected a JSON array of labels");
    std::vector<CuspidalLabel> labels;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& entry = j[i];
        const std::string where = "inventory[" + std::to_string(i) + "]";
        if (!entry.is_object() || !entry.contains("id"))
            throw ValidationError(where + ": expected an object with field \"id\"");
        if (!entry.at("id").is_string()) throw ValidationError(where + ".id: expected a string");
        CuspidalLabel label;
        label.id = entry.at("id").get<std::string>();
        label.dim = entry.contains("dim") ? parse_positive_int(entry.at("dim"), where + ".dim") : 1;
        label.torsion =
            entry.contains("torsion") ? parse_positive_int(entry.at("torsion"), where + ".torsion") : 1;
        labels.push_back(std::move(label));
    }
    return Inventory(std::move(labels));
}

WDParam parse_param(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("segments"))
        throw ValidationError("parameter: expected an object with fields \"n\" and \"segments\"");
    WDParam p;
    p.n = parse_positive_int(j.at("n"), "parameter.n");
    const json& segments = j.at("segments");
    if (!segments.is_array()) throw ValidationError("parameter.segments: expected an array");
    for (std::size_t i = 0; i < segments.size(); ++i) {
        const json& entry = segments[i];
        const std::string where = "segments[" + std::to_string(i) + "]";
        if (!entry.is_object() || !entry.contains("label") || !entry.contains("twist") ||
            !entry.contains("length"))
            throw ValidationError(where +
                                  ": expected an object with fields \"label\", \"twist\", \"length\"");
        if (!entry.at("label").is_string())
            throw ValidationError(where + ".label: expected a string");
        SegmentParam seg;
        seg.label = entry.at("label").get<std::string>();
        seg.twist = parse_twist(entry.at("twist"), where + ".twist");
        seg.length = parse_positive_int(entry.at("length"), where + ".length");
        p.segments.push_back(std::move(seg));
    }
    return p;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

Inventory load_inventory(const std::string& path) { return parse_inventory(load_json_file(path)); }

WDParam load_param(const std::string& path) { return parse_param(load_json_file(path)); }

std::string render_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace smoothdual

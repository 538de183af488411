#include "smoothdual/reports.hpp"

#include <cstdio>

#include "smoothdual/homology.hpp"
#include "smoothdual/tempered.hpp"

namespace smoothdual {

json catalog_report(const Inventory& inv, int n) {
    json classes = json::array();
    for (const InertialClass& cls : inertial_classes(inv, n)) {
        json components = json::array();
        for (const auto& [index, shape] : component_catalog(cls)) {
            const auto [hp0, hp1] = component_hp(shape);
            components.push_back(json{{"component", to_json(index)},
                                      {"shape", to_json(shape)},
                                      {"K", shape.K()},
                                      {"poincare", to_json(component_poincare(shape))},
                                      {"hp", json::array({hp0, hp1})}});
        }
        const auto [hp0, hp1] = block_hp(cls);
        json ordinary = json::array();
        for (const auto& [label, mult] : ordinary_shape(cls))
            ordinary.push_back(json::array({label, mult}));
        classes.push_back(json{{"class", to_json(cls)},
                               {"ordinary_shape", ordinary},
                               {"components", components},
                               {"block_hp", json::array({hp0, hp1})}});
    }
    return json{{"n", n}, {"classes", classes}};
}

json param_eval_report(const WDParam& p, const Inventory& inv, std::optional<int> q) {
    const ExtendedPoint x = alpha(p);
    json langlands = json::array();
    for (const SegmentParam& seg : langlands_order(p)) langlands.push_back(to_json(seg));
    json report = json{{"param", to_json(p)},
                       {"alpha", to_json(x)},
                       {"beta_alpha", to_json(beta(x, inv))},
                       {"infinitesimal_character", to_json(infinitesimal_character(p, inv))},
                       {"langlands", langlands},
                       {"stratum", to_json(stratum_of(p))},
                       {"tempered", is_tempered(p)}};
    if (q) report = render_numeric_twists(std::move(report), *q);
    return report;
}

namespace {

bool looks_like_twist(const json& node) {
    return node.is_object() && node.size() == 2 && node.contains("s") && node.contains("theta") &&
           node.at("s").is_string() && node.at("theta").is_string();
}

void annotate(json& node, int q) {
    if (looks_like_twist(node)) {
        const TwistCoord z = parse_twist(node, "twist");
        const auto [re, im] = to_complex(z, q);
        node["z"] = json::array({re, im});
        return;
    }
    if (node.is_object() || node.is_array())
        for (json& child : node) annotate(child, q);
}

}  // namespace

json render_numeric_twists(json report, int q) {
    annotate(report, q);
    return report;
}

}  // namespace smoothdual

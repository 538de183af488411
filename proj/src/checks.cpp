#include "smoothdual/checks.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "smoothdual/tempered.hpp"

namespace smoothdual {

namespace {

constexpr std::int64_t kMaxRecordedFailures = 5;

void record_failure(CheckReport& report, json failure) {
    ++report.failure_count;
    if (static_cast<std::int64_t>(report.failures.size()) < kMaxRecordedFailures)
        report.failures.push_back(std::move(failure));
}

}  // namespace

json CheckReport::to_json() const {
    return json{{"check", check},     {"seed", seed},
                {"samples", samples}, {"failure_count", failure_count},
                {"details", details}, {"failures", failures},
                {"passed", passed()}};
}

CheckReport run_diagram_check(std::uint64_t seed, std::int64_t samples, int max_n) {
    CheckReport report;
    report.check = "diagram";
    report.seed = seed;
    report.samples = samples;
    report.failures = json::array();
    report.details = json{{"max_n", max_n}};

    Rng rng(seed);
    for (std::int64_t k = 0; k < samples; ++k) {
        const Inventory inv = sample_inventory(rng);
        const int n = static_cast<int>(rng.uniform(1, max_n));
        const WDParam p = sample_param(rng, inv, n);
        const CuspidalPoint via_alpha = beta(alpha(p), inv);
        const CuspidalPoint direct = infinitesimal_character(p, inv);
        if (via_alpha != direct)
            record_failure(report, json{{"inventory", smoothdual::to_json(inv)},
                                        {"param", smoothdual::to_json(p)},
                                        {"beta_alpha", smoothdual::to_json(via_alpha)},
                                        {"infinitesimal_character", smoothdual::to_json(direct)}});
    }
    return report;
}

Inventory default_injectivity_inventory() {
    return Inventory({CuspidalLabel{"chi", 1, 1}, CuspidalLabel{"tau", 2, 1}});
}

CheckReport run_injectivity_check(const Inventory& inv, int max_mult, std::uint64_t seed,
                                  std::int64_t samples) {
    CheckReport report;
    report.check = "injectivity";
    report.seed = seed;
    report.samples = samples;
    report.failures = json::array();

    // every class over the inventory with all multiplicities <= max_mult
    std::vector<const CuspidalLabel*> sorted;
    for (const CuspidalLabel& label : inv.labels()) sorted.push_back(&label);
    std::sort(sorted.begin(), sorted.end(),
              [](const CuspidalLabel* a, const CuspidalLabel* b) { return a->id < b->id; });
    std::vector<InertialClass> classes;
    std::vector<std::pair<std::string, int>> entries;
    const std::function<void(std::size_t, int)> build = [&](std::size_t pos, int n) {
        if (pos == sorted.size()) {
            if (n > 0) classes.push_back(InertialClass{entries, n});
            return;
        }
        for (int m = 0; m <= max_mult; ++m) {
            if (m > 0) entries.emplace_back(sorted[pos]->id, m);
            build(pos + 1, n + m * sorted[pos]->dim);
            if (m > 0) entries.pop_back();
        }
    };
    build(0, 0);

    Rng rng(seed);
    std::int64_t components_tested = 0;
    std::int64_t pairs_tested = 0;
    for (const InertialClass& cls : classes) {
        for (const auto& [index, shape] : component_catalog(cls)) {
            ++components_tested;
            for (std::int64_t k = 0; k < samples; ++k) {
                const ExtendedPoint x1 = sample_point(rng, inv, index);
                ExtendedPoint x2 = sample_point(rng, inv, index);
                int retries = 0;
                while (x2 == x1 && retries < 64) {
                    x2 = sample_point(rng, inv, index);
                    ++retries;
                }
                if (x2 == x1) continue;  // coordinate grid exhausted; cannot happen at this scale
                ++pairs_tested;
                if (beta(x1, inv) == beta(x2, inv))
                    record_failure(report, json{{"class", smoothdual::to_json(cls)},
                                                {"component", smoothdual::to_json(index)},
                                                {"x1", smoothdual::to_json(x1)},
                                                {"x2", smoothdual::to_json(x2)},
                                                {"beta", smoothdual::to_json(beta(x1, inv))}});
            }
        }
    }
    report.details = json{{"max_mult", max_mult},
                          {"classes", classes.size()},
                          {"components_tested", components_tested},
                          {"pairs_tested", pairs_tested},
                          {"inventory", smoothdual::to_json(inv)}};
    return report;
}

CheckReport run_retraction_check(std::uint64_t seed, std::int64_t samples) {
    CheckReport report;
    report.check = "retraction";
    report.seed = seed;
    report.samples = samples;
    report.failures = json::array();
    report.details = json::object();

    Rng rng(seed);
    for (std::int64_t k = 0; k < samples; ++k) {
        const Inventory inv = sample_inventory(rng);
        const int n = static_cast<int>(rng.uniform(1, 8));
        const WDParam p = sample_param(rng, inv, n);
        const WDParam r = retract(p);

        const auto fail = [&](const char* property, const json& extra) {
            json failure = json{{"property", property},
                                {"inventory", smoothdual::to_json(inv)},
                                {"param", smoothdual::to_json(p)}};
            failure["got"] = extra;
            record_failure(report, failure);
        };

        if (retract(r) != r) fail("idempotence", smoothdual::to_json(retract(r)));
        if (!is_tempered(r)) fail("retract_lands_tempered", smoothdual::to_json(r));
        if (is_tempered(p) && r != p) fail("tempered_fixed_point", smoothdual::to_json(r));
        if (homotopy(p, Rational(0)) != p)
            fail("homotopy_at_zero", smoothdual::to_json(homotopy(p, Rational(0))));
        if (homotopy(p, Rational(1)) != r)
            fail("homotopy_at_one", smoothdual::to_json(homotopy(p, Rational(1))));

        const Rational t(rng.uniform(0, 4), 4);
        const WDParam mid = homotopy(p, t);
        if (stratum_of(mid) != stratum_of(p))
            fail("stratum_invariance", smoothdual::to_json(stratum_of(mid)));

        // angles and lengths are untouched; central exponents scale by (1-t)
        auto shape_data = [](const WDParam& q) {
            std::vector<std::tuple<std::string, int, Rational>> data;
            for (const SegmentParam& seg : q.segments)
                data.emplace_back(seg.label, seg.length, seg.twist.theta);
            std::sort(data.begin(), data.end());
            return data;
        };
        if (shape_data(mid) != shape_data(p)) fail("angles_lengths_invariant", smoothdual::to_json(mid));
        auto exponent_data = [](const WDParam& q, const Rational& scale) {
            std::vector<std::tuple<std::string, int, Rational, Rational>> data;
            for (const SegmentParam& seg : q.segments)
                data.emplace_back(seg.label, seg.length, seg.twist.theta,
                                  scale * central_exponent(seg));
            std::sort(data.begin(), data.end());
            return data;
        };
        if (exponent_data(mid, Rational(1)) != exponent_data(p, Rational(1) - t))
            fail("exponent_linearity", smoothdual::to_json(mid));
    }
    return report;
}

}  // namespace smoothdual

#include <doctest.h>

#include "smoothdual/checks.hpp"
#include "smoothdual/reports.hpp"
#include "smoothdual/tempered.hpp"

using namespace smoothdual;

TEST_CASE("catalog report for the principal GL(2) block") {
    const Inventory inv({CuspidalLabel{"chi", 1, 1}});
    const json report = catalog_report(inv, 2);
    CHECK(report.at("n") == 2);
    REQUIRE(report.at("classes").size() == 1);
    const json& block = report.at("classes")[0];
    CHECK(block.at("block_hp") == json::array({2, 2}));
    REQUIRE(block.at("components").size() == 2);
    CHECK(block.at("components")[0].at("component") == json{{"chi", json::array({2})}});
    CHECK(block.at("components")[0].at("K") == 1);
    CHECK(block.at("components")[1].at("component") == json{{"chi", json::array({1, 1})}});
    CHECK(block.at("components")[1].at("shape") == json::array({json::array({"chi", 1, 2})}));
}

TEST_CASE("catalog report for n = 3 has one class with three components") {
    const Inventory inv({CuspidalLabel{"chi", 1, 1}});
    const json report = catalog_report(inv, 3);
    REQUIRE(report.at("classes").size() == 1);
    CHECK(report.at("classes")[0].at("components").size() == 3);
    CHECK(report.at("classes")[0].at("block_hp") == json::array({4, 4}));
}

TEST_CASE("catalog report can be empty") {
    const Inventory inv({CuspidalLabel{"tau", 2, 1}});
    const json report = catalog_report(inv, 3);
    CHECK(report.at("classes").empty());
}

TEST_CASE("catalog report is deterministic") {
    const Inventory inv({CuspidalLabel{"chi", 1, 1}, CuspidalLabel{"tau", 2, 3}});
    CHECK(render_report(catalog_report(inv, 4)) == render_report(catalog_report(inv, 4)));
}

TEST_CASE("param eval report carries the advertised fields") {
    const Inventory inv({CuspidalLabel{"chi", 1, 1}});
    const WDParam p = validated(
        WDParam{{SegmentParam{"chi", TwistCoord(Rational(-1, 2), Rational(0)), 2}}, 2}, inv);
    const json report = param_eval_report(p, inv, std::nullopt);
    CHECK(report.at("tempered") == true);
    CHECK(report.at("stratum") == json{{"chi", json::array({2})}});
    CHECK(report.at("beta_alpha") == report.at("infinitesimal_character"));
    CHECK(report.at("langlands").size() == 1);
    CHECK_FALSE(report.at("alpha").at("coordinates")[0].at("twists")[0].contains("z"));

    const json numeric = param_eval_report(p, inv, 4);
    const json& twist = numeric.at("alpha").at("coordinates")[0].at("twists")[0];
    REQUIRE(twist.contains("z"));
    CHECK(twist.at("z")[0].get<double>() == doctest::Approx(2.0));  // 4^{1/2}
    CHECK(twist.at("z")[1].get<double>() == doctest::Approx(0.0));
}

TEST_CASE("check reports serialize their outcome") {
    const CheckReport report = run_diagram_check(17, 50);
    const json j = report.to_json();
    CHECK(j.at("check") == "diagram");
    CHECK(j.at("seed") == 17);
    CHECK(j.at("samples") == 50);
    CHECK(j.at("passed") == true);
    CHECK(j.at("failures").is_array());
}

TEST_CASE("identical seeds give identical check reports") {
    const json a = run_retraction_check(23, 200).to_json();
    const json b = run_retraction_check(23, 200).to_json();
    CHECK(render_report(a) == render_report(b));
    const json c = run_injectivity_check(default_injectivity_inventory(), 2, 23, 20).to_json();
    const json d = run_injectivity_check(default_injectivity_inventory(), 2, 23, 20).to_json();
    CHECK(render_report(c) == render_report(d));
}

#include <doctest.h>

#include "smoothdual/checks.hpp"
#include "smoothdual/errors.hpp"
#include "smoothdual/tempered.hpp"

using namespace smoothdual;

namespace {

Inventory gl2_inventory() { return Inventory({CuspidalLabel{"chi", 1, 1}}); }

TwistCoord tw(Rational s, Rational theta = Rational(0)) { return TwistCoord(s, theta); }

}  // namespace

TEST_CASE("tempered predicate") {
    const Inventory inv = gl2_inventory();
    const WDParam steinberg =
        validated(WDParam{{SegmentParam{"chi", tw(Rational(-1, 2)), 2}}, 2}, inv);
    CHECK(is_tempered(steinberg));

    const WDParam unitary =
        validated(WDParam{{SegmentParam{"chi", tw(Rational(0), Rational(1, 3)), 1}}, 1}, inv);
    CHECK(is_tempered(unitary));

    const WDParam psi_det = validated(WDParam{{SegmentParam{"chi", tw(Rational(1, 2)), 1},
                                               SegmentParam{"chi", tw(Rational(-1, 2)), 1}},
                                              2},
                                      inv);
    CHECK_FALSE(is_tempered(psi_det));
}

TEST_CASE("retraction moves exponents to the tempered normal form") {
    const Inventory inv = gl2_inventory();
    const WDParam steinberg =
        validated(WDParam{{SegmentParam{"chi", tw(Rational(-1, 2)), 2}}, 2}, inv);
    CHECK(retract(steinberg) == steinberg);

    const WDParam psi_det = validated(WDParam{{SegmentParam{"chi", tw(Rational(1, 2)), 1},
                                               SegmentParam{"chi", tw(Rational(-1, 2)), 1}},
                                              2},
                                      inv);
    const WDParam retracted = retract(psi_det);
    REQUIRE(retracted.segments.size() == 2);
    CHECK(retracted.segments[0].twist == tw(Rational(0)));
    CHECK(retracted.segments[1].twist == tw(Rational(0)));
    CHECK(is_tempered(retracted));

    const Inventory tau_inv({CuspidalLabel{"tau", 2, 1}});
    const WDParam shifted = validated(
        WDParam{{SegmentParam{"tau", tw(Rational(3, 4), Rational(1, 5)), 3}}, 6}, tau_inv);
    const WDParam back = retract(shifted);
    CHECK(back.segments[0].twist == tw(Rational(-1), Rational(1, 5)));
}

TEST_CASE("homotopy endpoints and midpoint") {
    const Inventory inv = gl2_inventory();
    const WDParam psi_det = validated(WDParam{{SegmentParam{"chi", tw(Rational(1, 2)), 1},
                                               SegmentParam{"chi", tw(Rational(-1, 2)), 1}},
                                              2},
                                      inv);
    CHECK(homotopy(psi_det, Rational(0)) == psi_det);
    CHECK(homotopy(psi_det, Rational(1)) == retract(psi_det));

    const WDParam mid = homotopy(psi_det, Rational(1, 2));
    REQUIRE(mid.segments.size() == 2);
    CHECK(mid.segments[0].twist == tw(Rational(-1, 4)));
    CHECK(mid.segments[1].twist == tw(Rational(1, 4)));

    CHECK_THROWS_AS(homotopy(psi_det, Rational(-1, 4)), ValidationError);
    CHECK_THROWS_AS(homotopy(psi_det, Rational(5, 4)), ValidationError);
}

TEST_CASE("stratum assembly") {
    const Inventory inv({CuspidalLabel{"chi", 1, 1}, CuspidalLabel{"tau", 2, 1}});
    const WDParam single =
        validated(WDParam{{SegmentParam{"chi", tw(Rational(-1, 2)), 2}}, 2}, inv);
    CHECK(stratum_of(single) == ComponentIndex{{"chi", {2}}});

    const WDParam pair = validated(WDParam{{SegmentParam{"chi", tw(Rational(1)), 1},
                                            SegmentParam{"chi", tw(Rational(2)), 1}},
                                           2},
                                   inv);
    CHECK(stratum_of(pair) == ComponentIndex{{"chi", {1, 1}}});

    const WDParam mixed = validated(WDParam{{SegmentParam{"chi", tw(Rational(0)), 2},
                                             SegmentParam{"tau", tw(Rational(1)), 1}},
                                            4},
                                    inv);
    CHECK(stratum_of(mixed) == ComponentIndex{{"chi", {2}}, {"tau", {1}}});
}

TEST_CASE("retraction property suite passes") {
    const CheckReport report = run_retraction_check(3, 3000);
    CHECK(report.passed());
    CHECK(report.failure_count == 0);
}

#include <doctest.h>

#include "smoothdual/rational.hpp"
#include "smoothdual/sampling.hpp"
#include "smoothdual/twist.hpp"

using namespace smoothdual;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(0, 7).den() == 1);
    CHECK(Rational(5, 3) + Rational(1, 3) == Rational(2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational ordering and floor") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-3).floor() == -3);
    CHECK(Rational(5, 6).frac() == Rational(5, 6));
    CHECK(Rational(-1, 6).frac() == Rational(5, 6));
    CHECK(Rational(13, 6).frac() == Rational(1, 6));
}

TEST_CASE("rational string round trip") {
    CHECK(Rational(-1, 2).str() == "-1/2");
    CHECK(Rational(4).str() == "4");
    CHECK(Rational::parse("-1/2") == Rational(-1, 2));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("twist product and norm powers") {
    const TwistCoord id(Rational(0), Rational(0));
    const TwistCoord z(Rational(1, 2), Rational(2, 3));
    CHECK(id * z == z);
    CHECK(norm_power(Rational(1)) * TwistCoord(Rational(-1, 2), Rational(0)) ==
          TwistCoord(Rational(1, 2), Rational(0)));
    CHECK(TwistCoord(Rational(1, 3), Rational(3, 4)) * TwistCoord(Rational(1, 3), Rational(1, 2)) ==
          TwistCoord(Rational(2, 3), Rational(1, 4)));
    CHECK(norm_power(Rational(0)) == id);
    CHECK(norm_power(Rational(-1, 2)) == TwistCoord(Rational(-1, 2), Rational(0)));
}

TEST_CASE("angle normalization into [0,1)") {
    CHECK(TwistCoord(Rational(0), Rational(7, 3)).theta == Rational(1, 3));
    CHECK(TwistCoord(Rational(0), Rational(-1, 4)).theta == Rational(3, 4));
    CHECK(TwistCoord(Rational(0), Rational(1)).theta == Rational(0));
}

TEST_CASE("torsion reduction") {
    CHECK(reduce_mod_torsion(TwistCoord(Rational(0), Rational(3, 4)), 1) ==
          TwistCoord(Rational(0), Rational(3, 4)));
    CHECK(reduce_mod_torsion(TwistCoord(Rational(0), Rational(3, 4)), 2) ==
          TwistCoord(Rational(0), Rational(1, 4)));
    CHECK(reduce_mod_torsion(TwistCoord(Rational(-1, 2), Rational(5, 6)), 3) ==
          TwistCoord(Rational(-1, 2), Rational(1, 6)));
    CHECK_THROWS_AS(reduce_mod_torsion(TwistCoord(), 0), std::domain_error);
}

TEST_CASE("numeric rendering is display-only and approximate") {
    auto [re, im] = to_complex(TwistCoord(Rational(0), Rational(0)), 3);
    CHECK(re == doctest::Approx(1.0));
    CHECK(im == doctest::Approx(0.0));
    std::tie(re, im) = to_complex(TwistCoord(Rational(1), Rational(0)), 3);
    CHECK(re == doctest::Approx(1.0 / 3.0));
    std::tie(re, im) = to_complex(TwistCoord(Rational(1, 2), Rational(1, 2)), 4);
    CHECK(re == doctest::Approx(-0.5));
    CHECK(im == doctest::Approx(0.0).epsilon(1e-9));
    CHECK_THROWS_AS(to_complex(TwistCoord(), 1), std::domain_error);
}

TEST_CASE("twist group laws hold exactly on random samples") {
    Rng rng(2024);
    const TwistCoord id(Rational(0), Rational(0));
    for (int k = 0; k < 500; ++k) {
        const TwistCoord a = sample_twist(rng);
        const TwistCoord b = sample_twist(rng);
        const TwistCoord c = sample_twist(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * id == a);
        CHECK(a * inverse(a) == id);
    }
}

TEST_CASE("torsion reduction is idempotent and compatible with torsion twists") {
    Rng rng(99);
    for (int k = 0; k < 500; ++k) {
        const TwistCoord a = sample_twist(rng);
        const int t = static_cast<int>(rng.uniform(1, 6));
        const TwistCoord once = reduce_mod_torsion(a, t);
        CHECK(reduce_mod_torsion(once, t) == once);
        CHECK(once.theta >= Rational(0));
        CHECK(once.theta < Rational(1, t));
        // reduction commutes with multiplication by torsion twists (s, k/t)
        const TwistCoord self_twist(sample_exponent(rng), Rational(rng.uniform(0, t - 1), t));
        CHECK(reduce_mod_torsion(a * self_twist, t) ==
              reduce_mod_torsion(once * self_twist, t));
        CHECK(reduce_mod_torsion(a * self_twist, t).theta == once.theta);
    }
}

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "smoothdual/rational.hpp"

namespace smoothdual {

// Coordinate of an unramified quasicharacter w -> z^{d(w)}: the pair (s, theta)
// with z = q^{-s} e^{2 pi i theta}. The norm character | | is (1, 0). The angle
// is kept normalized in [0, 1). All products, inverses and torsion reductions
// are exact; the residue cardinality q enters only through to_complex, which is
// display-only.
struct TwistCoord {
    Rational s;
    Rational theta;  // always in [0, 1)

    TwistCoord() = default;
    TwistCoord(Rational s_, Rational theta_) : s(s_), theta(theta_.frac()) {}

    friend bool operator==(const TwistCoord&, const TwistCoord&) = default;
    friend std::strong_ordering operator<=>(const TwistCoord&, const TwistCoord&) = default;
};

// Pointwise product of quasicharacters.
inline TwistCoord operator*(const TwistCoord& a, const TwistCoord& b) {
    return TwistCoord(a.s + b.s, a.theta + b.theta);
}

inline TwistCoord inverse(const TwistCoord& z) { return TwistCoord(-z.s, -z.theta); }

// The character | |^k.
inline TwistCoord norm_power(const Rational& k) { return TwistCoord(k, Rational(0)); }

// Reduce the angle modulo 1/t, identifying the t unramified self-twists of a
// cuspidal orbit with torsion number t.
inline TwistCoord reduce_mod_torsion(const TwistCoord& z, int t) {
    if (t < 1) throw std::domain_error("reduce_mod_torsion: torsion must be >= 1");
    if (t == 1) return z;
    const Rational whole(z.theta * Rational(t));
    return TwistCoord(z.s, z.theta - Rational(whole.floor(), t));
}

// Floating approximation q^{-s} (cos 2 pi theta, sin 2 pi theta). Never used in
// exact computations.
inline std::pair<double, double> to_complex(const TwistCoord& z, int q) {
    if (q < 2) throw std::domain_error("to_complex: q must be >= 2");
    const double mag = std::pow(static_cast<double>(q), -z.s.to_double());
    const double ang = 2.0 * std::numbers::pi * z.theta.to_double();
    return {mag * std::cos(ang), mag * std::sin(ang)};
}

}  // namespace smoothdual

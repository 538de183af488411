#pragma once

#include <cstdint>
#include <random>

#include "smoothdual/params.hpp"

namespace smoothdual {

// Seeded generators for the randomized property checks. Draws go through
// explicit modulo reduction on mt19937_64 output, never through the standard
// distributions, so a seed produces the same values on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [lo, hi], inclusive. Requires lo <= hi.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

private:
    std::mt19937_64 engine_;
};

// Exponent from the bounded grid: k/d with denominator d <= 4 and |k/d| <= 4.
// Covers every half-integer shift that occurs in the worked examples.
Rational sample_exponent(Rng& rng);

// Angle k/d with denominator d <= 12, in [0, 1).
Rational sample_angle(Rng& rng);

TwistCoord sample_twist(Rng& rng);

// One to three labels "c0", "c1", "c2"; c0 always has dim 1 so any n is
// reachable. Dims and torsions range over 1..3.
Inventory sample_inventory(Rng& rng);

// A validated random parameter of total dimension n over the inventory.
WDParam sample_param(Rng& rng, const Inventory& inv, int n);

// A point on the given component with canonical coordinates: per (label,
// part size) factor, a sorted multiset of twists reduced modulo torsion.
ExtendedPoint sample_point(Rng& rng, const Inventory& inv, const ComponentIndex& component);

}  // namespace smoothdual

#include "smoothdual/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace smoothdual {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next_u64() % span);
}

Rational sample_exponent(Rng& rng) {
    const std::int64_t den = rng.uniform(1, 4);
    const std::int64_t num = rng.uniform(-4 * den, 4 * den);
    return Rational(num, den);
}

Rational sample_angle(Rng& rng) {
    const std::int64_t den = rng.uniform(1, 12);
    const std::int64_t num = rng.uniform(0, den - 1);
    return Rational(num, den);
}

TwistCoord sample_twist(Rng& rng) { return TwistCoord(sample_exponent(rng), sample_angle(rng)); }

Inventory sample_inventory(Rng& rng) {
    const std::int64_t count = rng.uniform(1, 3);
    std::vector<CuspidalLabel> labels;
    for (std::int64_t i = 0; i < count; ++i) {
        CuspidalLabel label;
        label.id = "c" + std::to_string(i);
        label.dim = i == 0 ? 1 : static_cast<int>(rng.uniform(1, 3));
        label.torsion = static_cast<int>(rng.uniform(1, 3));
        labels.push_back(std::move(label));
    }
    return Inventory(std::move(labels));
}

WDParam sample_param(Rng& rng, const Inventory& inv, int n) {
    // draw label multiplicities (an inertial class), then a partition of each
    // multiplicity as the segment lengths
    const std::vector<InertialClass> classes = inertial_classes(inv, n);
    if (classes.empty())
        throw std::invalid_argument("sample_param: no inertial class reaches n");
    const InertialClass& cls =
        classes[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(classes.size()) - 1))];

    WDParam p;
    p.n = n;
    for (const auto& [id, mult] : cls.entries) {
        const std::vector<Partition> parts = partitions_of(mult);
        const Partition& lengths =
            parts[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(parts.size()) - 1))];
        for (const int length : lengths)
            p.segments.push_back(SegmentParam{id, sample_twist(rng), length});
    }
    return validated(std::move(p), inv);
}

ExtendedPoint sample_point(Rng& rng, const Inventory& inv, const ComponentIndex& component) {
    ExtendedPoint x;
    x.component = component;
    for (const auto& [label, partition] : component) {
        const int torsion = inv.at(label).torsion;
        for (const auto& [part, count] : part_multiplicities(partition)) {
            std::vector<TwistCoord> twists;
            twists.reserve(count);
            for (int i = 0; i < count; ++i)
                twists.push_back(reduce_mod_torsion(sample_twist(rng), torsion));
            std::sort(twists.begin(), twists.end());
            x.coordinates.emplace(std::make_pair(label, part), std::move(twists));
        }
    }
    return x;
}

}  // namespace smoothdual

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "smoothdual/json_io.hpp"
#include "smoothdual/sampling.hpp"

namespace smoothdual {

// Randomized verification suites. Each runner draws `samples` instances from
// `seed`, compares by exact equality, and reports counterexamples verbatim.
struct CheckReport {
    std::string check;
    std::uint64_t seed = 0;
    std::int64_t samples = 0;
    std::int64_t failure_count = 0;
    json details;   // per-check statistics
    json failures;  // array of failing instances, capped; count is exact

    bool passed() const { return failure_count == 0; }
    json to_json() const;
};

// beta(alpha(p)) versus the directly computed infinitesimal character, over
// fresh random inventories and parameters with n <= max_n.
CheckReport run_diagram_check(std::uint64_t seed, std::int64_t samples, int max_n = 8);

// On every component of every class over `inv` with all multiplicities
// <= max_mult: pairs of distinct canonical coordinates must have distinct
// beta images. `samples` counts pairs per component.
CheckReport run_injectivity_check(const Inventory& inv, int max_mult, std::uint64_t seed,
                                  std::int64_t samples);

// The two-label inventory the injectivity suite uses by default.
Inventory default_injectivity_inventory();

// Retraction properties over random parameters: idempotence, fixing exactly
// the tempered locus, homotopy endpoints, stratum invariance, invariance of
// angles and lengths, and exact linearity of the central exponents in t.
CheckReport run_retraction_check(std::uint64_t seed, std::int64_t samples);

}  // namespace smoothdual

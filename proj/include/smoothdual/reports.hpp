#pragma once

#include <optional>

#include "smoothdual/json_io.hpp"

namespace smoothdual {

// Full catalog for GL(n) over the inventory: every inertial class with its
// ordinary-quotient shape, extended-quotient components, Poincare polynomials
// and even/odd cohomology dimensions.
json catalog_report(const Inventory& inv, int n);

// Evaluation of one validated parameter: alpha, beta of alpha, the
// infinitesimal character, Langlands display order, stratum and temperedness.
// When q is given, twists are additionally rendered as complex approximations.
json param_eval_report(const WDParam& p, const Inventory& inv, std::optional<int> q);

// Adds "z": [re, im] next to every exact twist in the report.
json render_numeric_twists(json report, int q);

}  // namespace smoothdual

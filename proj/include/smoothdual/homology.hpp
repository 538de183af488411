#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "smoothdual/spectrum.hpp"

namespace smoothdual {

// Betti numbers of extended-quotient components and the even/odd cohomology
// dimensions they contribute to Hecke-algebra blocks.
//
// Each factor Sym^m C^x is C^{m-1} x C^x in elementary-symmetric-function
// coordinates (a monic degree-m polynomial with nonzero constant term is its
// coefficient vector), hence homotopy-equivalent to a circle. A component
// with K factors therefore has Poincare polynomial (1+t)^K.

struct PoincarePolynomial {
    std::vector<std::int64_t> coefficients;  // index = degree, trailing zeros trimmed

    std::int64_t eval(std::int64_t t) const;

    friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;
};

// (1+t)^K for a component with K symmetric-power factors.
PoincarePolynomial component_poincare(const ComponentShape& shape);

// (even-degree sum, odd-degree sum) of the component's Poincare polynomial.
std::pair<std::int64_t, std::int64_t> component_hp(const ComponentShape& shape);

// Componentwise sum over the class's component catalog: the even/odd
// cohomology dimensions of the corresponding Hecke-algebra block.
std::pair<std::int64_t, std::int64_t> block_hp(const InertialClass& cls);

// Sum over a finite selection of pairwise distinct blocks. Throws
// ValidationError on duplicates.
std::pair<std::int64_t, std::int64_t> hp_over_selection(const std::vector<InertialClass>& classes);

}  // namespace smoothdual

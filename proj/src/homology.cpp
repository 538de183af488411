#include "smoothdual/homology.hpp"

#include <stdexcept>

#include "smoothdual/errors.hpp"

namespace smoothdual {

std::int64_t PoincarePolynomial::eval(std::int64_t t) const {
    std::int64_t value = 0;
    std::int64_t power = 1;
    for (const std::int64_t c : coefficients) {
        value += c * power;
        power *= t;
    }
    return value;
}

PoincarePolynomial component_poincare(const ComponentShape& shape) {
    const int k = shape.K();
    if (k < 1) throw std::invalid_argument("component_poincare: empty shape");
    // binomial coefficients of (1+t)^K
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(k) + 1, 0);
    coeffs[0] = 1;
    for (int row = 1; row <= k; ++row)
        for (int j = row; j >= 1; --j) coeffs[j] += coeffs[j - 1];
    return PoincarePolynomial{coeffs};
}

std::pair<std::int64_t, std::int64_t> component_hp(const ComponentShape& shape) {
    const PoincarePolynomial poly = component_poincare(shape);
    std::int64_t even = 0;
    std::int64_t odd = 0;
    for (std::size_t degree = 0; degree < poly.coefficients.size(); ++degree)
        (degree % 2 == 0 ? even : odd) += poly.coefficients[degree];
    return {even, odd};
}

std::pair<std::int64_t, std::int64_t> block_hp(const InertialClass& cls) {
    std::int64_t hp0 = 0;
    std::int64_t hp1 = 0;
    for (const auto& [index, shape] : component_catalog(cls)) {
        const auto [even, odd] = component_hp(shape);
        hp0 += even;
        hp1 += odd;
    }
    return {hp0, hp1};
}

std::pair<std::int64_t, std::int64_t> hp_over_selection(
    const std::vector<InertialClass>& classes) {
    std::int64_t hp0 = 0;
    std::int64_t hp1 = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (classes[i] == classes[j])
                throw ValidationError("hp_over_selection: duplicate class at positions " +
                                      std::to_string(j) + " and " + std::to_string(i));
        const auto [even, odd] = block_hp(classes[i]);
        hp0 += even;
        hp1 += odd;
    }
    return {hp0, hp1};
}

}  // namespace smoothdual

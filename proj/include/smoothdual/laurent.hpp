#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace smoothdual {

// Laurent polynomials over Z in one formal variable. Only nonzero coefficients
// are stored, so equality of maps is equality of polynomials.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly monomial(std::int64_t coeff, int exponent) {
        LaurentPoly p;
        if (coeff != 0) p.terms_[exponent] = coeff;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r = a;
        for (const auto& [e, c] : b.terms_) {
            const std::int64_t sum = r.coeff(e) + c;
            if (sum == 0)
                r.terms_.erase(e);
            else
                r.terms_[e] = sum;
        }
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                const int e = ea + eb;
                const std::int64_t sum = r.coeff(e) + ca * cb;
                if (sum == 0)
                    r.terms_.erase(e);
                else
                    r.terms_[e] = sum;
            }
        return r;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

private:
    std::int64_t coeff(int exponent) const {
        const auto it = terms_.find(exponent);
        return it == terms_.end() ? 0 : it->second;
    }

    std::map<int, std::int64_t> terms_;
};

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

inline LaurentMatrix laurent_zeros(int rows, int cols) {
    return LaurentMatrix(rows, std::vector<LaurentPoly>(cols));
}

inline LaurentMatrix matmul(const LaurentMatrix& a, const LaurentMatrix& b) {
    if (a.empty() || b.empty() || a[0].size() != b.size())
        throw std::invalid_argument("matmul: shape mismatch");
    LaurentMatrix r = laurent_zeros(static_cast<int>(a.size()), static_cast<int>(b[0].size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j)
                r[i][j] = r[i][j] + a[i][k] * b[k][j];
    return r;
}

inline LaurentMatrix scale(const LaurentPoly& c, const LaurentMatrix& m) {
    LaurentMatrix r = m;
    for (auto& row : r)
        for (auto& entry : row) entry = c * entry;
    return r;
}

}  // namespace smoothdual

#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace smoothdual {

// Exact rational arithmetic. Values are always in lowest terms with a
// positive denominator, so memberwise equality is exact equality. The
// magnitudes that occur downstream (exponent shifts, small angles,
// centralizer orders) stay far below the 64-bit range.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}  // integers embed implicitly
    constexpr Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    constexpr std::int64_t num() const { return num_; }
    constexpr std::int64_t den() const { return den_; }

    constexpr bool is_zero() const { return num_ == 0; }
    constexpr bool is_integer() const { return den_ == 1; }

    constexpr Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend constexpr Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend constexpr Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend constexpr Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend constexpr Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;
    friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    // Largest integer <= value.
    constexpr std::int64_t floor() const {
        std::int64_t q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    // Value minus its floor, always in [0, 1).
    constexpr Rational frac() const { return *this - Rational(floor()); }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    // "p/q", or just "p" when the denominator is 1.
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) {
            s += '/';
            s += std::to_string(den_);
        }
        return s;
    }

    // Accepts the same forms str() produces, e.g. "-3/4", "5", "0".
    static Rational parse(std::string_view text);

private:
    constexpr void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
    const auto fail = [&]() -> Rational {
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
    };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    const auto read_digits = [&](std::int64_t& out) -> bool {
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') return false;
        out = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            out = out * 10 + (text[pos] - '0');
            ++pos;
        }
        return true;
    };
    std::int64_t num = 0;
    if (!read_digits(num)) return fail();
    std::int64_t den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        if (!read_digits(den) || den == 0) return fail();
    }
    if (pos != text.size()) return fail();
    return Rational(negative ? -num : num, den);
}

}  // namespace smoothdual

#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace totalsr {

// Fixed-point amount with four fractional digits. All utility arithmetic in
// the project runs on this type so that sums of quantity * unit-utility
// products are reproducible bit-for-bit and threshold comparisons are exact.
class Utility {
public:
    static constexpr std::int64_t kScale = 10000;

    constexpr Utility() = default;

    static constexpr Utility from_raw(std::int64_t raw) {
        Utility u;
        u.raw_ = raw;
        return u;
    }

    static constexpr Utility from_int(std::int64_t units) {
        return from_raw(units * kScale);
    }

    // Parses a decimal like "3", "2.5" or "0.0001" (at most four fractional
    // digits). Throws std::invalid_argument on anything else.
    static Utility parse(std::string_view text);

    constexpr std::int64_t raw() const { return raw_; }
    constexpr bool is_zero() const { return raw_ == 0; }
    constexpr bool positive() const { return raw_ > 0; }

    friend constexpr Utility operator+(Utility a, Utility b) {
        return from_raw(a.raw_ + b.raw_);
    }
    friend constexpr Utility operator-(Utility a, Utility b) {
        return from_raw(a.raw_ - b.raw_);
    }
    Utility& operator+=(Utility o) {
        raw_ += o.raw_;
        return *this;
    }
    Utility& operator-=(Utility o) {
        raw_ -= o.raw_;
        return *this;
    }
    // Scale by an integer quantity.
    friend constexpr Utility operator*(Utility a, std::int64_t n) {
        return from_raw(a.raw_ * n);
    }

    friend constexpr auto operator<=>(Utility a, Utility b) = default;

    // Canonical decimal rendering with trailing zeros stripped: "28", "2.5".
    std::string str() const;

    double to_double() const { return static_cast<double>(raw_) / kScale; }

private:
    std::int64_t raw_ = 0;
};

// Exact rational used for support and confidence values. Kept normalized
// with a positive denominator; numerators stay small (bounded by |D|), so
// cross-multiplication in 128-bit never overflows.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Fraction of(std::int64_t n, std::int64_t d);

    // Parses "0.5", "1", ".75" or "2/3" exactly.
    static Fraction parse(std::string_view text);

    static constexpr Fraction zero() { return Fraction{0, 1}; }
    static constexpr Fraction one() { return Fraction{1, 1}; }

    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
        __int128 lhs = static_cast<__int128>(a.num) * b.den;
        __int128 rhs = static_cast<__int128>(b.num) * a.den;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Four decimal places, round half up: 2/3 -> "0.6667", 1 -> "1.0000".
    std::string render4() const;

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

}  // namespace totalsr

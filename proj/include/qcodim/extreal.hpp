#pragma once

#include <cmath>
#include <compare>
#include <limits>

#include "qcodim/error.hpp"

namespace qcodim {

/// A real number or one of the symbols -inf / +inf, totally ordered.
///
/// Stored as an IEEE double; NaN is rejected at construction so the
/// defaulted ordering is a strict total order.
class ExtReal {
public:
    constexpr ExtReal() = default;
    ExtReal(double v) : value_(v) {  // NOLINT(google-explicit-constructor)
        if (std::isnan(v)) throw InvariantError("ExtReal: NaN is not an extended real");
    }

    static ExtReal plus_inf() { return ExtReal(std::numeric_limits<double>::infinity()); }
    static ExtReal minus_inf() { return ExtReal(-std::numeric_limits<double>::infinity()); }

    double value() const { return value_; }
    bool is_finite() const { return std::isfinite(value_); }
    bool is_plus_inf() const { return value_ == std::numeric_limits<double>::infinity(); }
    bool is_minus_inf() const { return value_ == -std::numeric_limits<double>::infinity(); }

    friend bool operator==(const ExtReal&, const ExtReal&) = default;
    friend std::strong_ordering operator<=>(const ExtReal& a, const ExtReal& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    double value_ = 0.0;
};

}  // namespace qcodim

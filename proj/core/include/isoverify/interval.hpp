#pragma once

#include <string>

#include "isoverify/rational.hpp"

namespace isoverify {

/// Closed interval with rational endpoints. The exact-comparison fallback
/// for values that do not live in a single quadratic field: comparisons
/// certify an ordering only when the intervals actually separate.
class RationalInterval {
public:
    RationalInterval() : lo_(0), hi_(0) {}
    explicit RationalInterval(Rational point) : lo_(point), hi_(std::move(point)) {}
    RationalInterval(Rational lo, Rational hi);

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) * Rational(1, 2); }
    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rational& r) const { return lo_ <= r && r <= hi_; }
    bool contains(const RationalInterval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }

    /// -1 if certainly below r, +1 if certainly above, 0 if undetermined.
    int cmp(const Rational& r) const {
        if (hi_ < r) return -1;
        if (lo_ > r) return 1;
        return 0;
    }
    /// -1/+1 when the two intervals are disjoint, 0 when they overlap.
    int cmp(const RationalInterval& o) const {
        if (hi_ < o.lo_) return -1;
        if (lo_ > o.hi_) return 1;
        return 0;
    }

    RationalInterval operator-() const { return RationalInterval(-hi_, -lo_); }
    RationalInterval operator+(const RationalInterval& o) const;
    RationalInterval operator-(const RationalInterval& o) const;
    RationalInterval operator*(const RationalInterval& o) const;
    /// Divisor interval must not contain zero.
    RationalInterval operator/(const RationalInterval& o) const;
    RationalInterval operator+(const Rational& r) const;
    RationalInterval operator-(const Rational& r) const;
    RationalInterval operator*(const Rational& r) const;

    RationalInterval abs() const;

    std::string str() const { return "[" + lo_.str() + ", " + hi_.str() + "]"; }

private:
    Rational lo_;
    Rational hi_;
};

/// Interval of width <= `width` containing sqrt(x), for rational x >= 0.
/// Uses a scaled integer square root; no iteration involved.
RationalInterval sqrt_enclosure(const Rational& x, const Rational& width);

}  // namespace isoverify

#pragma once

#include <string>
#include <string_view>

#include "isoverify/errors.hpp"
#include "isoverify/intutil.hpp"

namespace isoverify {

/// Exact rational number in lowest terms. Denominator is always >= 1 and
/// coprime to the numerator; zero is canonically 0/1. Every operation
/// returns a canonical value, so equality is field comparison.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(Int n) : num_(std::move(n)), den_(1) {}
    Rational(Int num, Int den);
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    int sign() const { return sgn(num_); }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inverse() const;

    /// Greatest integer <= value.
    Int floor() const { return fdiv(num_, den_); }
    /// Least integer >= value.
    Int ceil() const { return cdiv(num_, den_); }

    /// Exact three-way comparison by cross-multiplication.
    friend int cmp(const Rational& a, const Rational& b) {
        Int lhs = a.num_ * b.den_;
        Int rhs = b.num_ * a.den_;
        return ::cmp(lhs, rhs);
    }
    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return cmp(*this, o) < 0; }
    bool operator<=(const Rational& o) const { return cmp(*this, o) <= 0; }
    bool operator>(const Rational& o) const { return cmp(*this, o) > 0; }
    bool operator>=(const Rational& o) const { return cmp(*this, o) >= 0; }

    /// "num/den", or just "num" for integers. Re-parseable.
    std::string str() const;

    /// Parses "p/q" or "p" with optional sign. Throws ParseError.
    static Rational parse(std::string_view text);

private:
    void canonicalize();
    Int num_;
    Int den_;  // > 0
};

inline Rational operator*(const Int& a, const Rational& b) { return Rational(a) * b; }
inline Rational operator*(const Rational& a, const Int& b) { return a * Rational(b); }

struct RationalLess {
    bool operator()(const Rational& a, const Rational& b) const { return cmp(a, b) < 0; }
};

}  // namespace isoverify

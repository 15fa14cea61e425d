#pragma once

#include <optional>
#include <string>

#include "isoverify/budget.hpp"
#include "isoverify/interval.hpp"
#include "isoverify/rational.hpp"

namespace isoverify {

/// Exact real quadratic irrational (a + b*sqrt(d))/c.
///
/// Canonical form: d square-free; c > 0; gcd(a, b, c) = 1; rational values
/// are stored with b = 0 and d = 0 (a radicand of 0 or 1 folds into a).
/// Two canonical surds are equal iff they are componentwise equal, and the
/// sign of any surd is decided by integer arithmetic alone (isolating the
/// radical and squaring with sign tracking), so every comparison against a
/// rational or a same-field surd is exact. Arithmetic never leaves the
/// field: mixing distinct radicands is an error, not an approximation.
class QuadraticSurd {
public:
    QuadraticSurd() : a_(0), b_(0), c_(1), d_(0) {}
    QuadraticSurd(const Rational& r) : a_(r.num()), b_(0), c_(r.den()), d_(0) {}  // NOLINT
    QuadraticSurd(long n) : a_(n), b_(0), c_(1), d_(0) {}                         // NOLINT

    /// General constructor; reduces d to square-free form (may factor).
    QuadraticSurd(Int a, Int b, Int c, Int d, const Budget& budget = default_budget());

    /// sqrt(r) for a nonnegative rational (or integer) r.
    static QuadraticSurd sqrt_of(const Rational& r, const Budget& budget = default_budget());

    /// (a + b sqrt(d))/c for a radicand the caller knows to be square-free
    /// (typically straight out of a decomposition); skips the factoring pass.
    static QuadraticSurd from_square_free(Int a, Int b, Int c, Int d);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }
    Rational to_rational() const;

    /// True when arithmetic between the two values stays exact.
    bool same_field(const QuadraticSurd& o) const {
        return is_rational() || o.is_rational() || d_ == o.d_;
    }

    int sign() const;

    QuadraticSurd operator-() const;
    QuadraticSurd operator+(const QuadraticSurd& o) const;
    QuadraticSurd operator-(const QuadraticSurd& o) const;
    QuadraticSurd operator*(const QuadraticSurd& o) const;
    QuadraticSurd operator/(const QuadraticSurd& o) const;
    QuadraticSurd inverse() const;
    QuadraticSurd conjugate() const;
    /// Value squared; always stays in the field.
    QuadraticSurd squared() const { return *this * *this; }
    /// The square of the value when that square is rational
    /// (pure radical or rational values), otherwise nullopt.
    std::optional<Rational> rational_square() const;
    QuadraticSurd abs() const { return sign() < 0 ? -*this : *this; }

    /// Exact three-way comparison; requires a common field.
    int cmp(const QuadraticSurd& o) const { return (*this - o).sign(); }
    int cmp(const Rational& r) const { return (*this - QuadraticSurd(r)).sign(); }

    bool operator==(const QuadraticSurd& o) const {
        return a_ == o.a_ && b_ == o.b_ && c_ == o.c_ && d_ == o.d_;
    }
    bool operator!=(const QuadraticSurd& o) const { return !(*this == o); }

    /// Greatest integer <= value, decided exactly.
    Int floor() const;

    /// Interval of width <= `width` containing the value (scaled integer
    /// square root; single shot, no iteration).
    RationalInterval enclose(const Rational& width) const;

    /// Re-parseable rendering, e.g. "(1+sqrt(5))/2", "2*sqrt(2)", "-3/4".
    std::string str() const;

private:
    struct Canonical {};  // tag: d already square-free, skip factoring
    QuadraticSurd(Int a, Int b, Int c, Int d, Canonical);
    void normalize_no_factor();

    Int a_, b_, c_, d_;
};

inline QuadraticSurd operator+(const Rational& r, const QuadraticSurd& s) { return QuadraticSurd(r) + s; }
inline QuadraticSurd operator-(const Rational& r, const QuadraticSurd& s) { return QuadraticSurd(r) - s; }
inline QuadraticSurd operator*(const Rational& r, const QuadraticSurd& s) { return QuadraticSurd(r) * s; }

}  // namespace isoverify

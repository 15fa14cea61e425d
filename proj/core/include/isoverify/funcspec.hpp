#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "isoverify/budget.hpp"
#include "isoverify/interval.hpp"
#include "isoverify/surd.hpp"

namespace isoverify {

/// Exactly evaluable approximation function f: Z_+ -> Q, constrained to
/// (0, 1]. Values come back in lowest terms, so f(x) = A(x)/B(x) with
/// coprime A, B directly off the Rational.
///
/// Rules:
///   constant A/B          "const 1/2"
///   1/x^sigma             "pow 2"
///   1/base^x              "exp 2"
///   step table            "table 1:1/2,10:1/4"  (extends by its last value)
///   expression over x     "expr 1/(x*x+2)"
///
/// const/pow/exp are decreasing by construction. A table declared
/// decreasing is validated up front; an expression declared decreasing is
/// checked lazily against every evaluation seen so far, and a violation
/// throws MonotonicityViolation.
class ApproxFunction {
public:
    enum class Kind { Constant, PowerReciprocal, ExpReciprocal, Table, Composite };

    static ApproxFunction constant(const Rational& value);
    static ApproxFunction power_reciprocal(unsigned long sigma);
    static ApproxFunction exp_reciprocal(const Int& base);
    static ApproxFunction table(std::vector<std::pair<Int, Rational>> points,
                                bool declared_decreasing);
    static ApproxFunction composite(std::string_view expression, bool declared_decreasing);

    /// Parses the function DSL, e.g. "const 1/2", "expr 1/(x*x) decreasing".
    static ApproxFunction parse(std::string_view dsl);

    Kind kind() const;
    bool declared_decreasing() const;
    /// Re-parseable DSL text.
    std::string dsl() const;

    /// f(x) for x >= 1, exact and in (0, 1].
    Rational eval(const Int& x, const Budget& budget = default_budget()) const;

    /// The isolation gap g_f(x) = f(x)^2 f(B(x) x^2 + 2) / (A(x) x)^2,
    /// together with the inner evaluation point B(x) x^2 + 2 (an integer,
    /// since A(x) x^2 / f(x) = B(x) x^2).
    struct Gap {
        Int x;
        Rational value;
        Int argument;
    };
    Gap gap(const Int& x, const Budget& budget = default_budget()) const;

private:
    struct Impl;
    explicit ApproxFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Interval of width <= `width` containing
/// psi(x) = 2 mu / ((1 + sqrt(1 + 4 mu^2 / x^2)) x^2) for mu in (0, 1).
/// mu must have a rational square (pure radical or rational).
RationalInterval eval_psi(const QuadraticSurd& mu, const Int& x, const Rational& width,
                          const Budget& budget = default_budget());

/// psi(x) as an exact surd in mu's field, available exactly when
/// 1 + 4 mu^2 / x^2 is the square of a rational.
std::optional<QuadraticSurd> eval_psi_exact(const QuadraticSurd& mu, const Int& x);

/// Certifies psi(x) < mu/x^2 by refining until the enclosure's upper end
/// falls below the (exactly compared) bound; returns that enclosure.
RationalInterval eval_psi_below_mu(const QuadraticSurd& mu, const Int& x,
                                   const Budget& budget = default_budget());

}  // namespace isoverify

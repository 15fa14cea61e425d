#pragma once

#include <memory>
#include <optional>
#include <map>
#include <shared_mutex>
#include <variant>
#include <vector>

#include "isoverify/real_spec.hpp"

namespace isoverify {

/// Convergent p_n/q_n of a continued fraction, built by the three-term
/// recurrence with seeds p_{-1}=1, q_{-1}=0, p_{-2}=0, q_{-2}=1.
struct Convergent {
    std::size_t n = 0;
    Int p;
    Int q;
    Rational value() const { return Rational(p, q); }
    bool operator==(const Convergent& o) const { return n == o.n && p == o.p && q == o.q; }
};

struct PeriodInfo {
    std::size_t preperiod = 0;
    std::size_t period = 0;
    bool operator==(const PeriodInfo& o) const {
        return preperiod == o.preperiod && period == o.period;
    }
};

/// A value that is either exact (same quadratic field as its source) or
/// certified by a rational interval.
using ExactOrInterval = std::variant<QuadraticSurd, RationalInterval>;

/// Continued-fraction expansion of a RealSpec with memoized quotients,
/// convergents and (for surds) complete quotients.
///
/// Rational sources expand fully at construction in canonical form (last
/// quotient >= 2). Surd sources are expanded by the complete-quotient
/// recurrence with exact period detection: the expansion cycles as soon as
/// a complete quotient repeats. Stream sources pull quotients from their
/// rule and are never assumed periodic.
///
/// Extension of the memo is serialized internally; reads of materialized
/// prefixes may run concurrently.
class CFExpansion {
public:
    explicit CFExpansion(RealSpec source, Budget budget = default_budget());

    CFExpansion(const CFExpansion&) = delete;
    CFExpansion& operator=(const CFExpansion&) = delete;
    CFExpansion(CFExpansion&&) = default;
    CFExpansion& operator=(CFExpansion&&) = default;

    const RealSpec& source() const { return source_; }
    const Budget& budget() const { return budget_; }

    /// True iff the source is rational (finite expansion).
    bool finite() const { return finite_; }
    /// Number of quotients of a finite expansion.
    std::size_t length() const;

    /// Partial quotient a_n. Throws FiniteExpansionExhausted past the end
    /// of a rational expansion.
    Int quotient(std::size_t n);
    /// a_0 .. a_{count-1}, clamped to the full expansion for rationals.
    std::vector<Int> quotients(std::size_t count);

    /// Exact (preperiod, period) for surd sources; nullopt otherwise.
    std::optional<PeriodInfo> period();

    Convergent convergent(std::size_t n);
    /// Convergents 0..upto (clamped for finite expansions).
    std::vector<Convergent> convergents(std::size_t upto);

    /// Complete quotient alpha_n = [a_n; a_{n+1}, ...] as an exact surd.
    /// Surd sources only.
    QuadraticSurd complete_quotient(std::size_t n);

    /// Interval of width <= `width` around alpha_n, for any source kind.
    /// Rational sources give exact points (or throw past the end).
    RationalInterval complete_quotient_interval(std::size_t n, const Rational& width);

    /// Exact rational value of the finite tail [a_n; ...] of a rational
    /// source.
    Rational finite_tail_value(std::size_t n);

private:
    std::size_t ensure_locked(std::size_t count);
    template <typename F>
    auto with_quotients(std::size_t count, F&& f);

    RealSpec source_;
    Budget budget_;
    bool finite_ = false;

    std::unique_ptr<std::shared_mutex> mu_ = std::make_unique<std::shared_mutex>();
    std::vector<Int> quotients_;
    std::vector<Convergent> convergents_;  // grown lazily alongside quotients_

    // surd machinery
    struct SurdKeyLess {
        bool operator()(const QuadraticSurd& x, const QuadraticSurd& y) const;
    };
    std::vector<QuadraticSurd> states_;  // complete quotients x_0, x_1, ...
    std::map<QuadraticSurd, std::size_t, SurdKeyLess> seen_;
    std::optional<PeriodInfo> period_;
};

/// Expands at least `count` quotients (full expansion for rationals) and,
/// for surd sources, forces period detection.
CFExpansion expand(RealSpec source, std::size_t count, Budget budget = default_budget());

/// Tail data at index n: alpha_{n+1} (exact surd for surd sources, exact
/// rational for rational sources, certified interval for streams) together
/// with the reversed tail alpha_n^* = q_{n-1}/q_n.
struct TailData {
    std::size_t n = 0;
    ExactOrInterval alpha_next;
    Rational alpha_star;
};
TailData tail(CFExpansion& cf, std::size_t n, const Rational& width = Rational(1, 1'000'000));

/// Exact error |q_n alpha - p_n| computed through the identity
/// 1/(q_n (alpha_{n+1} + alpha_n^*)): an exact surd for surd sources, an
/// exact rational (as surd) for rational sources, an interval for streams.
ExactOrInterval perron_error(CFExpansion& cf, std::size_t n,
                             const Rational& width = Rational(1, 1'000'000'000));

/// Continuants of the tail [a_{n+1}; a_{n+2}, ..., a_{n+k}] for
/// k = 1..k_max: q_{n,1} = 1, p_{n,1} = a_{n+1}, same recurrence as
/// convergents.
struct TailContinuant {
    std::size_t n = 0;
    std::size_t k = 0;
    Int p;
    Int q;
    bool operator==(const TailContinuant& o) const {
        return n == o.n && k == o.k && p == o.p && q == o.q;
    }
};
std::vector<TailContinuant> tail_continuants(CFExpansion& cf, std::size_t n, std::size_t k_max);

/// All convergents with q_n <= q_bound. By Lagrange's best-approximation
/// theorem these minimize |q alpha - p| among all q' <= q.
std::vector<Convergent> best_approximations(CFExpansion& cf, const Int& q_bound);

}  // namespace isoverify

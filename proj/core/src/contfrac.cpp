#include "isoverify/contfrac.hpp"

#include <mutex>
#include <utility>

namespace isoverify {

bool CFExpansion::SurdKeyLess::operator()(const QuadraticSurd& x, const QuadraticSurd& y) const {
    int c = ::cmp(x.a(), y.a());
    if (c != 0) return c < 0;
    c = ::cmp(x.b(), y.b());
    if (c != 0) return c < 0;
    c = ::cmp(x.c(), y.c());
    if (c != 0) return c < 0;
    return ::cmp(x.d(), y.d()) < 0;
}

CFExpansion::CFExpansion(RealSpec source, Budget budget)
    : source_(std::move(source)), budget_(budget) {
    switch (source_.kind()) {
        case RealSpec::Kind::Rational: {
            // Euclidean expansion, computed in full up front.
            Int num = source_.rational_value().num();
            Int den = source_.rational_value().den();
            while (den != 0) {
                Int a = fdiv(num, den);
                Int rem = num - a * den;
                quotients_.push_back(std::move(a));
                num = std::move(den);
                den = std::move(rem);
            }
            // canonical form: fold a trailing quotient of 1
            if (quotients_.size() >= 2 && quotients_.back() == 1) {
                quotients_.pop_back();
                quotients_.back() += 1;
            }
            finite_ = true;
            break;
        }
        case RealSpec::Kind::Surd: {
            states_.push_back(source_.surd_value());
            seen_.emplace(states_.front(), 0);
            break;
        }
        case RealSpec::Kind::Stream:
            break;
    }
}

std::size_t CFExpansion::ensure_locked(std::size_t count) {
    while (!finite_ && quotients_.size() < count) {
        std::size_t idx = quotients_.size();
        switch (source_.kind()) {
            case RealSpec::Kind::Rational:
                break;  // fully materialized at construction
            case RealSpec::Kind::Stream: {
                Int a = source_.stream_rule().quotient(idx);
                if (idx >= 1 && a < 1)
                    throw InvalidArgument("stream rule '" + source_.stream_rule().name +
                                          "' produced quotient " + to_string(a) + " < 1 at index " +
                                          std::to_string(idx));
                quotients_.push_back(std::move(a));
                break;
            }
            case RealSpec::Kind::Surd: {
                if (period_ && idx >= period_->preperiod + period_->period) {
                    std::size_t src =
                        period_->preperiod + (idx - period_->preperiod) % period_->period;
                    quotients_.push_back(quotients_[src]);
                    break;
                }
                const QuadraticSurd& x = states_[idx];
                Int a = x.floor();
                QuadraticSurd frac = x - QuadraticSurd(Rational(a));
                quotients_.push_back(std::move(a));
                // frac is never zero: a quadratic irrational has an
                // infinite expansion.
                QuadraticSurd next = frac.inverse();
                auto it = seen_.find(next);
                if (it != seen_.end()) {
                    period_ = PeriodInfo{it->second, idx + 1 - it->second};
                } else {
                    seen_.emplace(next, idx + 1);
                    states_.push_back(std::move(next));
                }
                break;
            }
        }
    }
    while (convergents_.size() < quotients_.size()) {
        std::size_t n = convergents_.size();
        const Int& a = quotients_[n];
        Int p = n >= 1 ? Int(a * convergents_[n - 1].p + (n >= 2 ? convergents_[n - 2].p : Int(1)))
                       : Int(a);
        Int q = n >= 1 ? Int(a * convergents_[n - 1].q + (n >= 2 ? convergents_[n - 2].q : Int(0)))
                       : Int(1);
        convergents_.push_back(Convergent{n, std::move(p), std::move(q)});
    }
    return quotients_.size();
}

template <typename F>
auto CFExpansion::with_quotients(std::size_t count, F&& f) {
    {
        std::shared_lock lk(*mu_);
        if (finite_ ? convergents_.size() == quotients_.size()
                    : (quotients_.size() >= count && convergents_.size() >= count)) {
            return f();
        }
    }
    std::unique_lock lk(*mu_);
    ensure_locked(count);
    return f();
}

std::size_t CFExpansion::length() const {
    if (!finite_) throw InvalidArgument("length of an infinite expansion");
    return quotients_.size();
}

Int CFExpansion::quotient(std::size_t n) {
    return with_quotients(n + 1, [&]() -> Int {
        if (n >= quotients_.size())
            throw FiniteExpansionExhausted("quotient " + std::to_string(n) + " of a length-" +
                                           std::to_string(quotients_.size()) + " expansion");
        return quotients_[n];
    });
}

std::vector<Int> CFExpansion::quotients(std::size_t count) {
    return with_quotients(count, [&]() -> std::vector<Int> {
        std::size_t m = std::min(count, quotients_.size());
        return std::vector<Int>(quotients_.begin(), quotients_.begin() + m);
    });
}

std::optional<PeriodInfo> CFExpansion::period() {
    if (source_.kind() != RealSpec::Kind::Surd) return std::nullopt;
    {
        std::shared_lock lk(*mu_);
        if (period_) return period_;
    }
    std::unique_lock lk(*mu_);
    std::size_t cap = static_cast<std::size_t>(budget_.max_refinements);
    while (!period_) {
        if (quotients_.size() > cap)
            throw BudgetExceeded("period of " + source_.str() + " not detected within " +
                                 std::to_string(cap) + " quotients");
        ensure_locked(quotients_.size() + 16);
    }
    return period_;
}

Convergent CFExpansion::convergent(std::size_t n) {
    return with_quotients(n + 1, [&]() -> Convergent {
        if (n >= convergents_.size())
            throw FiniteExpansionExhausted("convergent " + std::to_string(n) + " of a length-" +
                                           std::to_string(convergents_.size()) + " expansion");
        return convergents_[n];
    });
}

std::vector<Convergent> CFExpansion::convergents(std::size_t upto) {
    return with_quotients(upto + 1, [&]() -> std::vector<Convergent> {
        std::size_t m = std::min(upto + 1, convergents_.size());
        return std::vector<Convergent>(convergents_.begin(), convergents_.begin() + m);
    });
}

QuadraticSurd CFExpansion::complete_quotient(std::size_t n) {
    if (source_.kind() != RealSpec::Kind::Surd)
        throw InvalidArgument("exact complete quotients require a surd source");
    return with_quotients(n + 1, [&]() -> QuadraticSurd {
        if (n < states_.size()) return states_[n];
        // the expansion has cycled; map n into the periodic part
        std::size_t src = period_->preperiod + (n - period_->preperiod) % period_->period;
        return states_[src];
    });
}

Rational CFExpansion::finite_tail_value(std::size_t n) {
    if (!finite_) throw InvalidArgument("finite tail of an infinite expansion");
    std::shared_lock lk(*mu_);
    if (n >= quotients_.size())
        throw FiniteExpansionExhausted("tail " + std::to_string(n) + " of a length-" +
                                       std::to_string(quotients_.size()) + " expansion");
    Rational v(quotients_.back());
    for (std::size_t i = quotients_.size() - 1; i-- > n;) v = Rational(quotients_[i]) + v.inverse();
    return v;
}

RationalInterval CFExpansion::complete_quotient_interval(std::size_t n, const Rational& width) {
    switch (source_.kind()) {
        case RealSpec::Kind::Surd:
            return complete_quotient(n).enclose(width);
        case RealSpec::Kind::Rational:
            return RationalInterval(finite_tail_value(n));
        case RealSpec::Kind::Stream: {
            // bracket [a_n; a_{n+1}, ...] by consecutive convergents of the tail
            Int p_prev = 1, q_prev = 0;
            Int p_cur = quotient(n), q_cur = 1;
            for (std::size_t j = 1;; ++j) {
                Int a = quotient(n + j);
                Int p_next = a * p_cur + p_prev;
                Int q_next = a * q_cur + q_prev;
                if (Rational(1, q_cur * q_next) <= width) {
                    Rational lo(p_cur, q_cur), hi(p_next, q_next);
                    if (lo > hi) std::swap(lo, hi);
                    return RationalInterval(std::move(lo), std::move(hi));
                }
                p_prev = std::move(p_cur);
                q_prev = std::move(q_cur);
                p_cur = std::move(p_next);
                q_cur = std::move(q_next);
            }
        }
    }
    throw Error("unreachable");
}

CFExpansion expand(RealSpec source, std::size_t count, Budget budget) {
    if (count < 1) throw InvalidArgument("expand requires count >= 1");
    CFExpansion cf(std::move(source), budget);
    cf.quotients(count);
    cf.period();
    return cf;
}

TailData tail(CFExpansion& cf, std::size_t n, const Rational& width) {
    Rational alpha_star =
        n == 0 ? Rational(0) : Rational(cf.convergent(n - 1).q, cf.convergent(n).q);
    switch (cf.source().kind()) {
        case RealSpec::Kind::Surd:
            return TailData{n, cf.complete_quotient(n + 1), std::move(alpha_star)};
        case RealSpec::Kind::Rational:
            return TailData{n, QuadraticSurd(cf.finite_tail_value(n + 1)), std::move(alpha_star)};
        case RealSpec::Kind::Stream:
            return TailData{n, cf.complete_quotient_interval(n + 1, width), std::move(alpha_star)};
    }
    throw Error("unreachable");
}

ExactOrInterval perron_error(CFExpansion& cf, std::size_t n, const Rational& width) {
    const Rational q_n(cf.convergent(n).q);
    Rational alpha_star =
        n == 0 ? Rational(0) : Rational(cf.convergent(n - 1).q, cf.convergent(n).q);
    switch (cf.source().kind()) {
        case RealSpec::Kind::Surd: {
            QuadraticSurd sum = cf.complete_quotient(n + 1) + QuadraticSurd(alpha_star);
            return (QuadraticSurd(q_n) * sum).inverse();
        }
        case RealSpec::Kind::Rational: {
            Rational sum = cf.finite_tail_value(n + 1) + alpha_star;
            return QuadraticSurd((q_n * sum).inverse());
        }
        case RealSpec::Kind::Stream: {
            Rational w = width;
            for (int i = 0; i < cf.budget().max_refinements; ++i) {
                RationalInterval sum = cf.complete_quotient_interval(n + 1, w) + alpha_star;
                RationalInterval err = RationalInterval(Rational(1)) / (sum * q_n);
                if (err.width() <= width) return err;
                w *= Rational(1, 2);
            }
            throw Undecided("perron error interval did not reach width " + width.str());
        }
    }
    throw Error("unreachable");
}

std::vector<TailContinuant> tail_continuants(CFExpansion& cf, std::size_t n, std::size_t k_max) {
    if (k_max < 1) throw InvalidArgument("tail_continuants requires k_max >= 1");
    std::vector<TailContinuant> out;
    out.reserve(k_max);
    Int p_prev = 1, q_prev = 0;  // p_{n,0}, q_{n,0}
    Int p_prev2 = 0, q_prev2 = 1;
    for (std::size_t k = 1; k <= k_max; ++k) {
        Int a = cf.quotient(n + k);
        Int p = a * p_prev + p_prev2;
        Int q = a * q_prev + q_prev2;
        out.push_back(TailContinuant{n, k, p, q});
        p_prev2 = std::move(p_prev);
        q_prev2 = std::move(q_prev);
        p_prev = std::move(p);
        q_prev = std::move(q);
    }
    return out;
}

std::vector<Convergent> best_approximations(CFExpansion& cf, const Int& q_bound) {
    if (q_bound < 1) throw InvalidArgument("best_approximations requires q_bound >= 1");
    std::vector<Convergent> out;
    for (std::size_t n = 0;; ++n) {
        Convergent c;
        try {
            c = cf.convergent(n);
        } catch (const FiniteExpansionExhausted&) {
            break;
        }
        if (c.q > q_bound) break;
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace isoverify

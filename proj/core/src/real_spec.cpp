#include "isoverify/real_spec.hpp"

namespace isoverify {

RealSpec RealSpec::stream_e() {
    StreamRule rule;
    rule.name = "e";
    rule.quotient = [](std::size_t n) -> Int {
        if (n == 0) return 2;
        if (n % 3 == 2) return Int(2 * (n / 3 + 1));
        return 1;
    };
    return stream(std::move(rule));
}

namespace {

Int checked_quotient(const StreamRule& rule, std::size_t n) {
    Int a = rule.quotient(n);
    if (n >= 1 && a < 1)
        throw InvalidArgument("stream rule '" + rule.name + "' produced quotient " + to_string(a) +
                              " < 1 at index " + std::to_string(n));
    return a;
}

/// Tightest bracketing by consecutive convergents of the stream with gap
/// 1/(q_n q_{n+1}) <= width. Terminates: denominators grow at least like
/// Fibonacci numbers.
RationalInterval stream_bracket(const StreamRule& rule, const Rational& width) {
    Int p_prev = 1, q_prev = 0;  // p_{-1}, q_{-1}
    Int p_cur = checked_quotient(rule, 0), q_cur = 1;
    for (std::size_t n = 1;; ++n) {
        Int a = checked_quotient(rule, n);
        Int p_next = a * p_cur + p_prev;
        Int q_next = a * q_cur + q_prev;
        // |p_next/q_next - p_cur/q_cur| = 1/(q_cur q_next)
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

}  // namespace

RationalInterval RealSpec::refine(const Rational& width, const Budget&) const {
    if (width.sign() <= 0) throw InvalidArgument("nonpositive target width");
    switch (kind()) {
        case Kind::Rational:
            return RationalInterval(rational_value());
        case Kind::Surd:
            return surd_value().enclose(width);
        case Kind::Stream:
            return stream_bracket(stream_rule(), width);
    }
    throw Error("unreachable");
}

int RealSpec::certified_cmp(const Rational& r, const Budget& budget) const {
    switch (kind()) {
        case Kind::Rational:
            return cmp(rational_value(), r);
        case Kind::Surd:
            return surd_value().cmp(r);
        case Kind::Stream: {
            Rational width(1, 4);
            for (int i = 0; i < budget.max_refinements; ++i) {
                int c = refine(width, budget).cmp(r);
                if (c != 0) return c;
                width *= Rational(1, 2);
            }
            throw Undecided("comparison of " + str() + " against " + r.str() +
                            " unresolved after " + std::to_string(budget.max_refinements) +
                            " refinements");
        }
    }
    throw Error("unreachable");
}

Int RealSpec::floor_times(const Int& q, const Budget& budget) const {
    if (q < 1) throw InvalidArgument("floor_times requires q >= 1");
    switch (kind()) {
        case Kind::Rational:
            return (rational_value() * q).floor();
        case Kind::Surd:
            return (QuadraticSurd(Rational(q)) * surd_value()).floor();
        case Kind::Stream: {
            Rational width(1, 4 * q);
            for (int i = 0; i < budget.max_refinements; ++i) {
                RationalInterval iv = refine(width, budget);
                Int lo = (iv.lo() * q).floor();
                Int hi = (iv.hi() * q).floor();
                if (lo == hi) return lo;
                width *= Rational(1, 2);
            }
            throw Undecided("floor of " + to_string(q) + " * " + str() + " unresolved");
        }
    }
    throw Error("unreachable");
}

std::string RealSpec::str() const {
    switch (kind()) {
        case Kind::Rational:
            return "rat:" + rational_value().str();
        case Kind::Surd:
            return "surd:" + surd_value().str();
        case Kind::Stream:
            return "stream:" + stream_rule().name;
    }
    throw Error("unreachable");
}

}  // namespace isoverify

#include "isoverify/isolation.hpp"

#include <algorithm>
#include <set>

namespace isoverify {

namespace {

struct PairLess {
    bool operator()(const std::pair<Int, Int>& a, const std::pair<Int, Int>& b) const {
        int c = ::cmp(a.first, b.first);
        if (c != 0) return c < 0;
        return ::cmp(a.second, b.second) < 0;
    }
};
using PairSet = std::set<std::pair<Int, Int>, PairLess>;

PairSet convergent_pairs(const RealSpec& alpha, const Int& q_bound, const Budget& budget) {
    CFExpansion cf(alpha, budget);
    PairSet out;
    for (const Convergent& c : best_approximations(cf, q_bound)) out.emplace(c.p, c.q);
    return out;
}

struct Margin {
    int sign = 0;
    std::optional<QuadraticSurd> exact;
};

/// Sign of t - |alpha - p/q| for a rational threshold t, exact for exact
/// sources and certified for streams.
Margin margin_vs_threshold(const RealSpec& alpha, const Int& p, const Int& q, const Rational& t,
                           const Budget& budget) {
    const Rational target(p, q);
    switch (alpha.kind()) {
        case RealSpec::Kind::Rational: {
            Rational diff = (alpha.rational_value() - target).abs();
            Rational margin = t - diff;
            return Margin{margin.sign(), QuadraticSurd(margin)};
        }
        case RealSpec::Kind::Surd: {
            QuadraticSurd err = (alpha.surd_value() - QuadraticSurd(target)).abs();
            QuadraticSurd margin = QuadraticSurd(t) - err;
            return Margin{margin.sign(), std::move(margin)};
        }
        case RealSpec::Kind::Stream: {
            int below_upper = alpha.certified_cmp(target + t, budget);
            if (below_upper >= 0) return Margin{-1, std::nullopt};
            int above_lower = alpha.certified_cmp(target - t, budget);
            return Margin{above_lower > 0 ? 1 : -1, std::nullopt};
        }
    }
    throw Error("unreachable");
}

/// Sign of mu/q^2 - |alpha - p/q| for a pure-root mu: both sides are
/// positive, so comparing squares decides exactly even across fields.
Margin margin_vs_mu(const RealSpec& alpha, const Int& p, const Int& q, const QuadraticSurd& mu,
                    const Budget& budget) {
    Rational bound_sq = *mu.rational_square() * Rational(1, q * q * q * q);
    const Rational target(p, q);
    auto attach_exact = [&](int sign) -> Margin {
        // exact difference available when everything stays in mu's field
        if (alpha.kind() == RealSpec::Kind::Rational) {
            QuadraticSurd err((alpha.rational_value() - target).abs());
            return Margin{sign, mu * Rational(1, q * q) - err};
        }
        if (alpha.kind() == RealSpec::Kind::Surd && alpha.surd_value().same_field(mu)) {
            QuadraticSurd err = (alpha.surd_value() - QuadraticSurd(target)).abs();
            return Margin{sign, mu * Rational(1, q * q) - err};
        }
        return Margin{sign, std::nullopt};
    };
    switch (alpha.kind()) {
        case RealSpec::Kind::Rational: {
            Rational diff = (alpha.rational_value() - target).abs();
            return attach_exact(-cmp(diff * diff, bound_sq));
        }
        case RealSpec::Kind::Surd: {
            QuadraticSurd err = alpha.surd_value() - QuadraticSurd(target);
            return attach_exact(-err.squared().cmp(bound_sq));
        }
        case RealSpec::Kind::Stream: {
            Rational w(1, 4 * q * q);
            for (int i = 0; i < budget.max_refinements; ++i) {
                RationalInterval err = (alpha.refine(w, budget) - target).abs();
                int c = (err * err).cmp(bound_sq);
                if (c != 0) return Margin{-c, std::nullopt};
                w *= Rational(1, 2);
            }
            throw Undecided("mu-threshold comparison unresolved for q = " + to_string(q));
        }
    }
    throw Error("unreachable");
}

/// Scans q in [q_lo, q_hi] directly; `threshold` maps q to the rational
/// bound t(q) of |alpha - p/q| < t(q).
template <typename ThresholdFn>
void scan_direct(std::vector<SolutionRecord>& out, const RealSpec& alpha, const Int& q_lo,
                 const Int& q_hi, ThresholdFn&& threshold, const PairSet& convergents,
                 const ApproxFunction& f, const Budget& budget) {
    for (Int q = q_lo; q <= q_hi; ++q) {
        Rational t = threshold(q);
        Int p0 = alpha.floor_times(q, budget);
        for (const Int& p : {p0, Int(p0 + 1)}) {
            if (gcd(p, q) != 1) continue;
            Margin m = margin_vs_threshold(alpha, p, q, t, budget);
            if (m.sign <= 0) continue;
            // the recorded margin is always relative to f(q)/q^2
            Rational base_t = f.eval(q, budget) * Rational(1, q * q);
            Margin base = base_t == t ? std::move(m) : margin_vs_threshold(alpha, p, q, base_t, budget);
            out.push_back(SolutionRecord{p, q, convergents.count({p, q}) > 0, base.sign,
                                         std::move(base.exact)});
        }
    }
}

Rational strengthened_threshold(const ApproxFunction& f, const Int& q, const Rational& epsilon,
                                const Budget& budget) {
    Rational fq = f.eval(q, budget);
    Rational gap = f.gap(q, budget).value;
    return (fq - (Rational(1) - epsilon) * gap) * Rational(1, q * q);
}

void require_epsilon(const Rational& epsilon) {
    if (epsilon.sign() <= 0 || epsilon >= Rational(1))
        throw InvalidArgument("epsilon must lie in (0, 1), got " + epsilon.str());
}

}  // namespace

std::vector<SolutionRecord> enumerate_solutions(const RealSpec& alpha, const ApproxFunction& f,
                                                const Int& q_bound,
                                                std::optional<Rational> strengthened_epsilon,
                                                const Budget& budget) {
    if (q_bound < 1) throw InvalidArgument("enumerate_solutions requires q_bound >= 1");
    if (strengthened_epsilon) require_epsilon(*strengthened_epsilon);
    PairSet convergents = convergent_pairs(alpha, q_bound, budget);
    std::vector<SolutionRecord> out;
    auto threshold = [&](const Int& q) {
        return strengthened_epsilon ? strengthened_threshold(f, q, *strengthened_epsilon, budget)
                                    : f.eval(q, budget) * Rational(1, q * q);
    };
    scan_direct(out, alpha, 1, q_bound, threshold, convergents, f, budget);
    return out;
}

std::vector<SolutionRecord> fast_solutions(const RealSpec& alpha, const ApproxFunction& f,
                                           const Int& q_bound, const Budget& budget) {
    if (q_bound < 1) throw InvalidArgument("fast_solutions requires q_bound >= 1");
    if (!f.declared_decreasing())
        throw InvalidArgument("fast_solutions requires a declared-decreasing f");
    const Rational half(1, 2);

    // least x with f(x) <= 1/2 (monotone bisection); q_bound + 1 when none
    Int x0;
    if (f.eval(1, budget) <= half) {
        x0 = 1;
    } else if (f.eval(q_bound, budget) > half) {
        x0 = q_bound + 1;
    } else {
        Int lo = 1, hi = q_bound;
        while (hi - lo > 1) {
            Int mid = (lo + hi) / 2;
            (f.eval(mid, budget) <= half ? hi : lo) = mid;
        }
        x0 = hi;
    }

    PairSet convergents = convergent_pairs(alpha, q_bound, budget);
    std::vector<SolutionRecord> out;
    auto threshold = [&](const Int& q) { return f.eval(q, budget) * Rational(1, q * q); };
    if (x0 > 1) scan_direct(out, alpha, 1, x0 - 1, threshold, convergents, f, budget);

    // where f <= 1/2 only convergents can solve (Legendre criterion)
    CFExpansion cf(alpha, budget);
    for (const Convergent& c : best_approximations(cf, q_bound)) {
        if (c.q < x0) continue;
        Margin m = margin_vs_threshold(alpha, c.p, c.q, threshold(c.q), budget);
        if (m.sign > 0) out.push_back(SolutionRecord{c.p, c.q, true, m.sign, std::move(m.exact)});
    }
    return out;
}

namespace {

/// Certified sign of alpha_idx - r for a stream expansion's complete
/// quotient (always irrational, so the loop separates).
int tail_certified_cmp(CFExpansion& cf, std::size_t idx, const Rational& r, const Budget& budget) {
    Rational w(1, 4);
    for (int i = 0; i < budget.max_refinements; ++i) {
        int c = cf.complete_quotient_interval(idx, w).cmp(r);
        if (c != 0) return c;
        w *= Rational(1, 2);
    }
    throw Undecided("tail comparison unresolved at index " + std::to_string(idx));
}

}  // namespace

std::vector<TraceEntry> trace_isolation(const RealSpec& alpha, const ApproxFunction& f,
                                        const Rational& epsilon, std::size_t n_begin,
                                        std::size_t n_end, const Budget& budget) {
    if (alpha.is_rational_number())
        throw InvalidArgument("the trace requires an irrational alpha (surd or stream)");
    require_epsilon(epsilon);
    if (n_end < n_begin) throw InvalidArgument("empty trace range");
    const bool exact = alpha.kind() == RealSpec::Kind::Surd;

    CFExpansion cf(alpha, budget);
    std::vector<TraceEntry> out;
    out.reserve(n_end - n_begin + 1);
    for (std::size_t n = n_begin; n <= n_end; ++n) {
        TraceEntry e;
        e.n = n;
        Convergent cn = cf.convergent(n);
        e.q_n = cn.q;
        e.q_prev = n == 0 ? Int(0) : cf.convergent(n - 1).q;
        e.f_n = f.eval(cn.q, budget);
        e.A_n = e.f_n.num();
        e.B_n = e.f_n.den();
        const Rational star(e.q_prev, e.q_n);
        const Rational inv_f = e.f_n.inverse();
        Rational f_over_q = e.f_n * Rational(1, e.q_n);
        Rational c1_rhs = e.f_n * (Rational(1) - f_over_q * f_over_q);

        bool case_one, c3;
        QuadraticSurd alpha_next_exact;
        if (exact) {
            alpha_next_exact = cf.complete_quotient(n + 1);
            QuadraticSurd inv_sum = (alpha_next_exact + QuadraticSurd(star)).inverse();
            case_one = c1_rhs.sign() > 0 && inv_sum.cmp(c1_rhs) < 0;
            c3 = inv_sum.cmp(e.f_n) < 0;
        } else {
            // 1/(alpha_{n+1} + star) < r  <=>  alpha_{n+1} > 1/r - star  (r > 0)
            case_one = c1_rhs.sign() > 0 &&
                       tail_certified_cmp(cf, n + 1, c1_rhs.inverse() - star, budget) > 0;
            c3 = tail_certified_cmp(cf, n + 1, inv_f - star, budget) > 0;
        }
        e.case_kind = case_one ? CaseKind::CaseOne : CaseKind::CaseTwo;
        e.c3_active = c3;

        if (c3) {
            e.C_n = e.q_n * e.B_n - e.q_prev * e.A_n;
            const Int Aq = e.A_n * e.q_n;

            // select k with q_{n,k} <= A_n q_n < q_{n,k+1}
            Int p_prev = 1, q_prev_c = 0;  // p_{n,0}, q_{n,0}
            Int p_k = cf.quotient(n + 1), q_k = 1;
            std::size_t k = 1;
            for (;;) {
                Int a_next = cf.quotient(n + k + 1);
                Int q_next = a_next * q_k + q_prev_c;
                if (q_next > Aq) break;
                Int p_next = a_next * p_k + p_prev;
                p_prev = std::move(p_k);
                q_prev_c = std::move(q_k);
                p_k = std::move(p_next);
                q_k = std::move(q_next);
                ++k;
            }
            e.k = k;
            e.q_nk = q_k;

            // continuant bound: q_{n+k} <= (q_{n+1} + q_n) q_{n,k}
            e.continuant_holds = cf.convergent(n + k).q <= (cf.convergent(n + 1).q + e.q_n) * q_k;

            const Rational final_rhs = (Rational(1) - epsilon) *
                                       f.eval(e.B_n * e.q_n * e.q_n + 2, budget) *
                                       Rational(1, Aq * Aq);
            if (exact) {
                QuadraticSurd delta = alpha_next_exact + QuadraticSurd(star - inv_f);
                QuadraticSurd lhs = delta * Rational(Aq);
                QuadraticSurd rhs =
                    (Rational(q_k) * alpha_next_exact - QuadraticSurd(Rational(p_k))).abs();
                e.c5_holds = lhs.cmp(rhs) >= 0;
                e.final_bound_holds = delta.cmp(final_rhs) > 0;
                e.delta = ExactOrInterval(std::move(delta));
            } else {
                // A_n q_n delta_n = A_n q_n alpha_{n+1} - C_n; compare the
                // two linear forms in alpha_{n+1} with certified signs.
                if (Aq == q_k && e.C_n == p_k) {
                    e.c5_holds = true;  // identical linear forms
                } else {
                    int err_side = tail_certified_cmp(cf, n + 1, Rational(p_k, q_k), budget);
                    Int u = Aq - err_side * q_k;
                    Int v = e.C_n - err_side * p_k;
                    if (u == 0)
                        e.c5_holds = v <= 0;
                    else if (u > 0)
                        e.c5_holds = tail_certified_cmp(cf, n + 1, Rational(v, u), budget) > 0;
                    else
                        e.c5_holds = tail_certified_cmp(cf, n + 1, Rational(v, u), budget) < 0;
                }
                e.final_bound_holds =
                    tail_certified_cmp(cf, n + 1, final_rhs + inv_f - star, budget) > 0;
                // certified positive enclosure of delta_n
                Rational w(1, 1024);
                for (int i = 0;; ++i) {
                    if (i >= budget.max_refinements)
                        throw Undecided("delta enclosure unresolved at n = " + std::to_string(n));
                    RationalInterval delta =
                        cf.complete_quotient_interval(n + 1, w) + (star - inv_f);
                    if (delta.lo().sign() > 0 && delta.width() <= Rational(1, 1000000)) {
                        e.delta = ExactOrInterval(std::move(delta));
                        break;
                    }
                    w *= Rational(1, 2);
                }
            }
        }
        out.push_back(std::move(e));
    }
    return out;
}

IsolationReport verify_isolation(const RealSpec& alpha, const ApproxFunction& f,
                                 const VerifyOptions& options) {
    require_epsilon(options.epsilon);
    if (options.q_bound < 1) throw InvalidArgument("verify requires q_bound >= 1");
    if (options.min_weak < 1) throw InvalidArgument("verify requires min_weak >= 1");
    if (!f.declared_decreasing())
        throw InvalidArgument("the isolation statement needs a decreasing f");
    const Budget& budget = options.budget;

    IsolationReport r;
    r.alpha_text = alpha.str();
    r.f_text = f.dsl();
    r.epsilon = options.epsilon;
    r.q_bound = options.q_bound;
    r.min_weak = options.min_weak;
    r.rational_alpha = alpha.is_rational_number();
    if (r.rational_alpha)
        r.notes.push_back(
            "alpha is rational: all solution lists are finite and the proof trace is skipped");

    r.weak = fast_solutions(alpha, f, options.q_bound, budget);
    for (const SolutionRecord& rec : r.weak) {
        Rational t = strengthened_threshold(f, rec.q, options.epsilon, budget);
        if (margin_vs_threshold(alpha, rec.p, rec.q, t, budget).sign > 0) r.strong.push_back(rec);
    }

    std::vector<SolutionRecord> weak2 = fast_solutions(alpha, f, 2 * options.q_bound, budget);
    r.weak_count_doubled = weak2.size();
    r.strong_count_doubled = 0;
    for (const SolutionRecord& rec : weak2) {
        Rational t = strengthened_threshold(f, rec.q, options.epsilon, budget);
        if (margin_vs_threshold(alpha, rec.p, rec.q, t, budget).sign > 0) ++r.strong_count_doubled;
    }

    if (options.with_trace && alpha.kind() == RealSpec::Kind::Surd) {
        CFExpansion cf(alpha, budget);
        std::size_t n_max = best_approximations(cf, options.q_bound).size();
        if (n_max > 0) r.trace = trace_isolation(alpha, f, options.epsilon, 0, n_max - 1, budget);
        std::optional<std::size_t> last_false;
        std::optional<std::size_t> first_c3_after;
        for (const TraceEntry& e : r.trace) {
            if (!e.c3_active) continue;
            if (!e.final_bound_holds)
                last_false = e.n;
            else if (!first_c3_after || (last_false && *first_c3_after <= *last_false))
                first_c3_after = e.n;
        }
        if (first_c3_after && (!last_false || *first_c3_after > *last_false))
            r.observed_threshold = first_c3_after;
    } else if (options.with_trace && alpha.kind() == RealSpec::Kind::Stream) {
        r.notes.push_back(
            "trace omitted for stream sources here; run the trace operation directly");
    }

    if (r.weak.size() < r.min_weak) {
        r.verdict = Verdict::Confirmed;
        r.notes.push_back("confirmed vacuously: fewer than " + std::to_string(r.min_weak) +
                          " base solutions up to q_bound");
    } else if (r.strong.empty()) {
        r.verdict = Verdict::InsufficientData;
        r.notes.push_back("base solutions abound but no strengthened solution was found; "
                          "raise q_bound or lower epsilon");
    } else if (r.strong_count_doubled < r.strong.size()) {
        r.verdict = Verdict::InsufficientData;
        r.notes.push_back("strengthened-solution count shrank at 2 q_bound; "
                          "this indicates an implementation or budget issue");
    } else {
        r.verdict = Verdict::Confirmed;
    }
    return r;
}

SpectrumWindowReport check_spectrum_window(std::size_t nu, const Rational& gamma,
                                           const RealSpec& alpha, const Int& q_bound,
                                           const Budget& budget) {
    if (nu < 1) throw InvalidArgument("spectrum window is indexed from nu = 1");
    if (q_bound < 1) throw InvalidArgument("q_bound must be >= 1");
    SpectrumWindowReport r;
    r.nu = nu;
    r.gamma = gamma;
    r.q_bound = q_bound;
    r.mu_upper = mu_constant(nu, budget).mu;
    r.mu_lower = mu_constant(nu + 1, budget).mu;
    if (!(r.mu_lower.cmp(gamma) < 0 && r.mu_upper.cmp(gamma) > 0))
        throw GammaOutOfRange("gamma = " + gamma.str() + " is not strictly between mu_" +
                              std::to_string(nu + 1) + " = " + r.mu_lower.str() + " and mu_" +
                              std::to_string(nu) + " = " + r.mu_upper.str());

    r.gamma_solutions = fast_solutions(alpha, ApproxFunction::constant(gamma), q_bound, budget);

    // mu_{nu+1} < 1/2, so only convergents can solve the mu inequality
    CFExpansion cf(alpha, budget);
    for (const Convergent& c : best_approximations(cf, q_bound)) {
        Margin m = margin_vs_mu(alpha, c.p, c.q, r.mu_lower, budget);
        if (m.sign > 0)
            r.mu_solutions.push_back(SolutionRecord{c.p, c.q, true, m.sign, std::move(m.exact)});
    }
    r.notes.push_back("counts at finite q_bound; the infinite statement is not decidable here");
    return r;
}

SharpBoundReport check_sharp_bound(std::size_t nu, const RealSpec& alpha, const Int& q_bound,
                                   const Budget& budget) {
    if (nu < 1) throw InvalidArgument("sharp bound is indexed from nu = 1");
    if (q_bound < 1) throw InvalidArgument("q_bound must be >= 1");
    SharpBoundReport r;
    r.nu = nu;
    r.q_bound = q_bound;
    r.mu = mu_constant(nu, budget).mu;

    CFExpansion cf(alpha, budget);
    for (const Convergent& c : best_approximations(cf, q_bound)) {
        Margin m = margin_vs_mu(alpha, c.p, c.q, r.mu, budget);
        if (m.sign > 0)
            r.weak.push_back(SolutionRecord{c.p, c.q, true, m.sign, std::move(m.exact)});
    }

    for (const SolutionRecord& rec : r.weak) {
        SharpBoundEntry entry;
        entry.p = rec.p;
        entry.q = rec.q;
        const Rational target(rec.p, rec.q);
        std::optional<QuadraticSurd> psi_exact = eval_psi_exact(r.mu, rec.q);
        std::optional<QuadraticSurd> err_exact;
        if (alpha.kind() == RealSpec::Kind::Surd)
            err_exact = (alpha.surd_value() - QuadraticSurd(target)).abs();
        else if (alpha.kind() == RealSpec::Kind::Rational)
            err_exact = QuadraticSurd((alpha.rational_value() - target).abs());

        if (psi_exact && err_exact && psi_exact->same_field(*err_exact)) {
            int c = err_exact->cmp(*psi_exact);
            entry.holds = c <= 0;
            entry.equality = c == 0;
        } else {
            // equality needs the exact route above (field alignment), so
            // interval separation terminates
            Rational w(1, 4 * rec.q * rec.q);
            bool decided = false;
            for (int i = 0; i < budget.max_refinements; ++i) {
                RationalInterval psi = eval_psi(r.mu, rec.q, w, budget);
                RationalInterval err =
                    err_exact ? err_exact->enclose(w) : (alpha.refine(w, budget) - target).abs();
                if (err.hi() <= psi.lo()) {
                    entry.holds = true;
                    decided = true;
                    break;
                }
                if (err.lo() > psi.hi()) {
                    entry.holds = false;
                    decided = true;
                    break;
                }
                w *= Rational(1, 2);
            }
            if (!decided)
                throw Undecided("sharp-bound comparison unresolved at q = " + to_string(rec.q));
        }
        r.entries.push_back(std::move(entry));
    }
    r.notes.push_back("per-pair outcomes up to q_bound; equality marks the bound being attained");
    return r;
}

}  // namespace isoverify

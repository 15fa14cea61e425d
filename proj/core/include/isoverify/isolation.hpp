#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isoverify/contfrac.hpp"
#include "isoverify/funcspec.hpp"
#include "isoverify/markoff.hpp"

namespace isoverify {

/// A coprime pair (p, q) solving |alpha - p/q| < f(q)/q^2 (or a
/// strengthened variant). The margin is the sign of f(q)/q^2 - |alpha - p/q|
/// regardless of which inequality admitted the record; the exact difference
/// is attached whenever alpha lives in a single quadratic field.
struct SolutionRecord {
    Int p;
    Int q;
    bool is_convergent = false;
    int margin_sign = 0;
    std::optional<QuadraticSurd> margin;

    Rational value() const { return Rational(p, q); }
    bool operator==(const SolutionRecord& o) const {
        return p == o.p && q == o.q && is_convergent == o.is_convergent &&
               margin_sign == o.margin_sign && margin == o.margin;
    }
};

/// Per-convergent classification of the isolation argument.
/// CaseOne: 1/(alpha_{n+1} + alpha_n^*) < f_n (1 - (f_n/q_n)^2), in which
/// case the n-th convergent itself satisfies the strengthened inequality.
/// CaseTwo: the reverse (non-strict) bound.
enum class CaseKind { CaseOne, CaseTwo };

struct TraceEntry {
    std::size_t n = 0;
    CaseKind case_kind = CaseKind::CaseTwo;
    /// 1/(alpha_{n+1} + alpha_n^*) < f_n, i.e. the n-th convergent solves
    /// the base inequality; the delta/k machinery below is populated
    /// exactly when this holds.
    bool c3_active = false;
    Rational f_n;
    Int A_n, B_n;  // f(q_n) = A_n/B_n in lowest terms
    Int q_n, q_prev;

    std::optional<ExactOrInterval> delta;  // alpha_{n+1} + alpha_n^* - 1/f_n > 0
    Int C_n;                               // q_n B_n - q_{n-1} A_n
    std::size_t k = 0;                     // q_{n,k} <= A_n q_n < q_{n,k+1}
    Int q_nk;
    bool c5_holds = false;          // A_n q_n delta_n >= |q_{n,k} alpha_{n+1} - p_{n,k}|
    bool continuant_holds = false;  // q_{n+k} <= (q_{n+1} + q_n) q_{n,k}
    bool final_bound_holds = false; // delta_n > (1-eps) f(B_n q_n^2 + 2) / (A_n q_n)^2
};

enum class Verdict { Confirmed, InsufficientData };

struct VerifyOptions {
    Rational epsilon{1, 10};
    Int q_bound{10000};
    std::size_t min_weak = 5;
    bool with_trace = true;
    Budget budget{};
};

/// Outcome of one verification job. "Infinitely many" is finitized
/// honestly: Confirmed means the solution lists at q_bound met the
/// configured thresholds and did not shrink at 2 q_bound, never a claim
/// about the infinite statement itself.
struct IsolationReport {
    std::string alpha_text;
    std::string f_text;
    Rational epsilon;
    Int q_bound;
    std::size_t min_weak = 0;
    bool rational_alpha = false;
    std::vector<SolutionRecord> weak;    // base inequality
    std::vector<SolutionRecord> strong;  // strengthened inequality; subset of weak
    std::size_t weak_count_doubled = 0;
    std::size_t strong_count_doubled = 0;
    std::vector<TraceEntry> trace;
    /// Smallest n such that the final lower bound held at every traced
    /// c3-active index >= n (observational, not a proof threshold).
    std::optional<std::size_t> observed_threshold;
    Verdict verdict = Verdict::InsufficientData;
    std::vector<std::string> notes;
};

/// Direct scan over q = 1..q_bound testing p = floor(q alpha) and its
/// successor (sufficient since f <= 1 forces |q alpha - p| < 1/q). With
/// `strengthened_epsilon` the threshold becomes
/// (f(q) - (1-eps) g_f(q))/q^2. All comparisons are exact or certified.
std::vector<SolutionRecord> enumerate_solutions(const RealSpec& alpha, const ApproxFunction& f,
                                                const Int& q_bound,
                                                std::optional<Rational> strengthened_epsilon = {},
                                                const Budget& budget = default_budget());

/// Same output as enumerate_solutions for decreasing f, in time
/// proportional to the number of convergents: on the region where
/// f <= 1/2, only convergents can solve (Legendre), and the finite region
/// before it is delegated to the direct scan.
std::vector<SolutionRecord> fast_solutions(const RealSpec& alpha, const ApproxFunction& f,
                                           const Int& q_bound,
                                           const Budget& budget = default_budget());

/// Runs both inequalities at q_bound, re-counts at 2 q_bound, and traces
/// the per-convergent case analysis (surd sources). Never claims
/// refutation: a failed check reports InsufficientData with diagnostics.
IsolationReport verify_isolation(const RealSpec& alpha, const ApproxFunction& f,
                                 const VerifyOptions& options = VerifyOptions{});

/// Per-convergent proof trace over n in [n_begin, n_end]: classifies
/// CaseOne/CaseTwo, and where the base inequality is active computes
/// delta_n, C_n, selects k, and checks the best-approximation step, the
/// continuant bound and the final lower bound, all exactly (surds) or by
/// certified intervals (streams).
std::vector<TraceEntry> trace_isolation(const RealSpec& alpha, const ApproxFunction& f,
                                        const Rational& epsilon, std::size_t n_begin,
                                        std::size_t n_end, const Budget& budget = default_budget());

/// Spot check of the spectrum-window statement: gamma must lie strictly
/// between mu_{nu+1} and mu_nu; counts solutions for the gamma threshold
/// and for the mu_{nu+1} threshold up to q_bound. Report only; the
/// infinite statement is not decidable at finite q_bound.
struct SpectrumWindowReport {
    std::size_t nu = 0;
    Rational gamma;
    Int q_bound;
    QuadraticSurd mu_upper;  // mu_nu
    QuadraticSurd mu_lower;  // mu_{nu+1}
    std::vector<SolutionRecord> gamma_solutions;
    std::vector<SolutionRecord> mu_solutions;
    std::vector<std::string> notes;
};
SpectrumWindowReport check_spectrum_window(std::size_t nu, const Rational& gamma,
                                           const RealSpec& alpha, const Int& q_bound,
                                           const Budget& budget = default_budget());

/// Spot check of the sharp bound psi_nu: for every solution of
/// |alpha - p/q| < mu_nu/q^2 with q <= q_bound, certifies whether
/// |alpha - p/q| <= psi_nu(q) (non-strict, exactly as stated; equality
/// does occur and is detected via the exact psi path).
struct SharpBoundEntry {
    Int p, q;
    bool holds = false;
    bool equality = false;
};
struct SharpBoundReport {
    std::size_t nu = 0;
    Int q_bound;
    QuadraticSurd mu;
    std::vector<SolutionRecord> weak;
    std::vector<SharpBoundEntry> entries;
    std::vector<std::string> notes;
};
SharpBoundReport check_sharp_bound(std::size_t nu, const RealSpec& alpha, const Int& q_bound,
                                   const Budget& budget = default_budget());

}  // namespace isoverify

#pragma once

namespace isoverify {

/// Effort caps for the operations that are exact but not constant-cost.
/// Hitting a cap raises Undecided or BudgetExceeded instead of looping
/// or allocating without bound.
struct Budget {
    /// Interval-halving steps allowed per certified comparison.
    int max_refinements = 10'000;

    /// Trial-division limit for square-free reduction of radicands.
    unsigned long trial_division_bound = 1'000'000;

    /// Pollard-rho restarts allowed when trial division leaves a composite.
    int pollard_rounds = 64;

    /// Largest x for which gap values of 1/base^x rules are evaluated;
    /// the inner argument has ~x^2*base^x bits.
    long max_exp_gap_x = 16;

    /// Upper bound on the bit size of any single evaluated integer.
    unsigned long max_value_bits = 1ul << 27;
};

inline Budget default_budget() { return Budget{}; }

}  // namespace isoverify

#pragma once

#include <cstddef>
#include <vector>

#include "isoverify/budget.hpp"
#include "isoverify/surd.hpp"

namespace isoverify {

/// Ordered solution m >= m1 >= m2 of m^2 + m1^2 + m2^2 = 3 m m1 m2.
struct MarkoffTriple {
    Int m, m1, m2;
    bool operator==(const MarkoffTriple& o) const {
        return m == o.m && m1 == o.m1 && m2 == o.m2;
    }
    bool satisfies_equation() const {
        return m * m + m1 * m1 + m2 * m2 == 3 * m * m1 * m2;
    }
};

/// All triples with m <= bound, generated by breadth-first traversal of the
/// tree rooted at (1,1,1) under the Vieta involution x -> 3yz - x on each
/// coordinate, deduplicated and sorted by (m, m1, m2). Every generated
/// triple is re-checked against the equation.
std::vector<MarkoffTriple> markoff_triples(const Int& bound);

/// The first `count` Markoff numbers (maxima of triples) in increasing
/// order. Throws UnicityViolation if two distinct triples ever share a
/// maximum (never expected; flagged rather than hidden).
std::vector<Int> markoff_numbers(std::size_t count);

/// mu_nu = m / sqrt(9 m^2 - 4) for the nu-th Markoff number m, as an exact
/// normalized surd (rationalized denominator).
struct SpectrumConstant {
    std::size_t nu = 0;
    Int m;
    QuadraticSurd mu;
};
SpectrumConstant mu_constant(std::size_t nu, const Budget& budget = default_budget());

}  // namespace isoverify

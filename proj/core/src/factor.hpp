#pragma once

#include "isoverify/budget.hpp"
#include "isoverify/intutil.hpp"

namespace isoverify::detail {

struct SquareFreeParts {
    Int square_root;  // s
    Int squarefree;   // r, with n = s^2 * r and r square-free
};

/// Decomposes n >= 0 as s^2 * r with r square-free. Trial division up to
/// the budget's bound, then Pollard rho on what remains; throws
/// BudgetExceeded if the leftover composite resists the rho budget.
SquareFreeParts square_free_decompose(const Int& n, const Budget& budget);

}  // namespace isoverify::detail

#include "factor.hpp"

#include <map>

#include "isoverify/errors.hpp"

namespace isoverify::detail {
namespace {

bool probably_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0; }

/// Pollard rho (Brent's cycle finding). Returns a nontrivial factor of a
/// composite n, or 0 if this round's parameters failed.
Int pollard_round(const Int& n, unsigned long c, unsigned long max_iters) {
    Int x = 2, y = 2, d = 1, diff, prod = 1;
    unsigned long count = 0;
    auto step = [&](Int& v) { v = (v * v + c) % n; };
    while (d == 1 && count < max_iters) {
        step(x);
        step(y);
        step(y);
        diff = x - y;
        if (diff == 0) return 0;  // cycle without factor; try another c
        prod = (prod * (diff < 0 ? Int(-diff) : diff)) % n;
        if (++count % 64 == 0) {
            d = gcd(prod, n);
            prod = 1;
        }
    }
    if (d == 1) d = gcd(prod, n);
    if (d == n || d == 1) return 0;
    return d;
}

void factor_into(std::map<Int, unsigned long, IntLess>& out, Int n, const Budget& budget) {
    if (n == 1) return;
    if (probably_prime(n)) {
        out[n] += 1;
        return;
    }
    if (is_perfect_square(n)) {
        Int r = isqrt(n);
        factor_into(out, r, budget);
        factor_into(out, std::move(r), budget);
        return;
    }
    for (int round = 0; round < budget.pollard_rounds; ++round) {
        Int d = pollard_round(n, static_cast<unsigned long>(round) + 1, 1ul << 18);
        if (d != 0) {
            factor_into(out, d, budget);
            factor_into(out, n / d, budget);
            return;
        }
    }
    throw BudgetExceeded("square-free reduction: factoring budget exhausted for " + to_string(n));
}

}  // namespace

SquareFreeParts square_free_decompose(const Int& n, const Budget& budget) {
    if (n < 0) throw InvalidArgument("square-free decomposition of a negative integer");
    if (n == 0) return {1, 0};
    Int m = n;
    Int s = 1, r = 1;
    auto strip = [&](unsigned long p) {
        unsigned long e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        if (e == 0) return;
        if (e >= 2) s *= pow_ui(Int(p), e / 2);
        if (e % 2 == 1) r *= p;
    };
    strip(2);
    strip(3);
    // 6k +/- 1 wheel
    for (unsigned long p = 5; p <= budget.trial_division_bound; p += 6) {
        if (Int(p) * p > m) break;
        strip(p);
        strip(p + 2);
    }
    if (m > 1) {
        if (Int(budget.trial_division_bound) * budget.trial_division_bound > m) {
            // remaining cofactor is prime (no divisor below its square root)
            r *= m;
        } else {
            std::map<Int, unsigned long, IntLess> factors;
            factor_into(factors, m, budget);
            for (const auto& [p, e] : factors) {
                if (e >= 2) s *= pow_ui(p, e / 2);
                if (e % 2 == 1) r *= p;
            }
        }
    }
    return {std::move(s), std::move(r)};
}

}  // namespace isoverify::detail

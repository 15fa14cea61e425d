#include <doctest.h>

#include "isoverify/funcspec.hpp"
#include "isoverify/markoff.hpp"

using namespace isoverify;

TEST_CASE("rule evaluation basics") {
    CHECK(ApproxFunction::constant(Rational(1, 2)).eval(7) == Rational(1, 2));
    CHECK(ApproxFunction::power_reciprocal(2).eval(3) == Rational(1, 9));
    CHECK(ApproxFunction::exp_reciprocal(2).eval(4) == Rational(1, 16));
    CHECK(ApproxFunction::constant(Rational(1)).eval(1) == Rational(1));

    ApproxFunction t = ApproxFunction::table({{1, Rational(1, 2)}, {10, Rational(1, 4)}}, true);
    CHECK(t.eval(1) == Rational(1, 2));
    CHECK(t.eval(9) == Rational(1, 2));
    CHECK(t.eval(10) == Rational(1, 4));
    CHECK(t.eval(1000000) == Rational(1, 4));  // extends by its final value

    ApproxFunction e = ApproxFunction::composite("1/(x*x)", true);
    CHECK(e.eval(5) == Rational(1, 25));
    CHECK(e.eval(1) == Rational(1));
}

TEST_CASE("range and monotonicity violations") {
    CHECK_THROWS_AS(ApproxFunction::constant(Rational(3, 2)), RangeViolation);
    CHECK_THROWS_AS(ApproxFunction::constant(Rational(0)), RangeViolation);
    CHECK_THROWS_AS(ApproxFunction::table({{1, Rational(1, 2)}, {5, Rational(2, 3)}}, true),
                    MonotonicityViolation);
    CHECK_THROWS_AS(ApproxFunction::table({{2, Rational(1, 2)}}, false), InvalidArgument);

    ApproxFunction big = ApproxFunction::composite("x/2", false);
    CHECK(big.eval(2) == Rational(1));
    CHECK_THROWS_AS(big.eval(3), RangeViolation);  // 3/2 > 1

    // x/(x*x-6*x+10)/10 rises then falls: 1/50, 1/10, ...
    ApproxFunction humped = ApproxFunction::composite("x/(x*x-6*x+10)/10", true);
    CHECK(humped.eval(1) == Rational(1, 50));
    CHECK_THROWS_AS(humped.eval(2), MonotonicityViolation);

    CHECK_THROWS_AS(ApproxFunction::power_reciprocal(1).eval(0), InvalidArgument);
}

TEST_CASE("gap closed forms from the worked examples") {
    // constant A/B: g(x) = A/(B^3 x^2)
    for (auto [a, b] : {std::pair<long, long>{1, 2}, {3, 7}, {1, 1}}) {
        ApproxFunction f = ApproxFunction::constant(Rational(a, b));
        for (long x = 1; x <= 100; ++x) {
            auto g = f.gap(x);
            CHECK(g.value == Rational(a, b * b * b * x * x));
            CHECK(g.argument == b * x * x + 2);
        }
    }
    // 1/x^sigma: g(x) = 1/((x^{2+sigma}+2)^sigma x^{2 sigma + 2})
    for (unsigned long sigma : {1ul, 2ul, 3ul}) {
        ApproxFunction f = ApproxFunction::power_reciprocal(sigma);
        for (long x = 1; x <= 100; ++x) {
            auto g = f.gap(x);
            Int inner = pow_ui(Int(x), 2 + sigma) + 2;
            CHECK(g.value == Rational(1, pow_ui(inner, sigma) * pow_ui(Int(x), 2 * sigma + 2)));
        }
    }
    // 1/2^x: g(x) = 1/(x^2 2^{x^2 2^x + 2x + 2})
    ApproxFunction f = ApproxFunction::exp_reciprocal(2);
    for (long x = 1; x <= 8; ++x) {
        auto g = f.gap(x);
        Int exponent = Int(x) * x * pow_ui(2, x) + 2 * x + 2;
        CHECK(g.value == Rational(1, Int(x) * x * pow_ui(2, exponent.get_ui())));
    }
}

TEST_CASE("gap sits strictly between 0 and f, and under f^3/x^2 when decreasing") {
    std::vector<ApproxFunction> fns = {
        ApproxFunction::constant(Rational(1, 2)),
        ApproxFunction::constant(Rational(1)),
        ApproxFunction::power_reciprocal(1),
        ApproxFunction::power_reciprocal(2),
        ApproxFunction::table({{1, Rational(1)}, {4, Rational(1, 3)}, {50, Rational(1, 64)}}, true),
        ApproxFunction::composite("1/(x+1)", true),
    };
    for (const auto& f : fns) {
        for (long x = 1; x <= 200; ++x) {
            auto g = f.gap(x);
            Rational fx = f.eval(x);
            CHECK(g.value.sign() > 0);
            if (x > 1) CHECK(g.value < fx);
            CHECK(g.value <= fx * fx * fx * Rational(1, Int(x) * x));
        }
    }
}

TEST_CASE("exp gap evaluation is capped") {
    ApproxFunction f = ApproxFunction::exp_reciprocal(2);
    CHECK_NOTHROW(f.gap(8));
    CHECK_THROWS_AS(f.gap(17), BudgetExceeded);
    Budget loose;
    loose.max_exp_gap_x = 17;
    loose.max_value_bits = 1ul << 30;
    CHECK_NOTHROW(f.gap(17, loose));
    Budget tight;
    tight.max_exp_gap_x = 4;
    CHECK_THROWS_AS(f.gap(5, tight), BudgetExceeded);
}

TEST_CASE("DSL parsing round trips") {
    for (const char* text : {"const 1/2", "pow 2", "exp 3", "table 1:1/2,10:1/4 decreasing",
                             "expr 1/(x*x+2) decreasing", "expr 1/(x+1)"}) {
        ApproxFunction f = ApproxFunction::parse(text);
        CHECK(f.dsl() == text);
        CHECK(ApproxFunction::parse(f.dsl()).dsl() == f.dsl());
    }
    CHECK(ApproxFunction::parse("const 1/2").declared_decreasing());
    CHECK(ApproxFunction::parse("pow 3 decreasing").declared_decreasing());
    CHECK(!ApproxFunction::parse("expr 1/(x+1)").declared_decreasing());
    CHECK(ApproxFunction::parse("expr 1/x^2 decreasing").eval(4) == Rational(1, 16));
}

TEST_CASE("DSL errors carry caret positions") {
    CHECK_THROWS_AS(ApproxFunction::parse("nope 1/2"), ParseError);
    CHECK_THROWS_AS(ApproxFunction::parse("const"), ParseError);
    CHECK_THROWS_AS(ApproxFunction::parse("const 5/3"), ParseError);
    CHECK_THROWS_AS(ApproxFunction::parse("pow 0"), ParseError);
    CHECK_THROWS_AS(ApproxFunction::parse("table 5:1/2"), ParseError);
    try {
        ApproxFunction::parse("expr 1/(x*)");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.input() == "expr 1/(x*)");
        CHECK(e.offset() == 10);  // the ')'
        CHECK(e.caret_diagnostic().find('^') != std::string::npos);
    }
}

TEST_CASE("psi enclosures") {
    // mu_1 = 1/sqrt 5: psi(1) = 2/(sqrt 5 + 3) = (3 - sqrt 5)/2 ~ 0.38196;
    // sqrt(1 + 4/5) = 3/sqrt 5 stays in Q(sqrt 5), so this is exact
    QuadraticSurd mu1 = mu_constant(1).mu;
    auto exact1 = eval_psi_exact(mu1, 1);
    REQUIRE(exact1.has_value());
    CHECK(*exact1 == QuadraticSurd(3, -1, 2, 5));
    RationalInterval psi1 = eval_psi(mu1, 1, Rational(1, 1000000));
    CHECK(psi1.width() <= Rational(1, 1000000));
    CHECK(exact1->cmp(psi1.lo()) >= 0);
    CHECK(exact1->cmp(psi1.hi()) <= 0);

    // x = 2: radicand 6/5 leaves the field; only the enclosure is available
    CHECK(!eval_psi_exact(mu1, 2).has_value());
    RationalInterval psi2 = eval_psi(mu1, 2, Rational(1, 1000000));
    CHECK(psi2.width() <= Rational(1, 1000000));

    // q = Fibonacci: 5*3^2+4 = 49 makes sqrt((5q^2+4)/(5q^2)) = 7 sqrt(5)/15
    auto exact3 = eval_psi_exact(mu1, 3);
    REQUIRE(exact3.has_value());
    RationalInterval via_interval = eval_psi(mu1, 3, Rational(1, 1000000000));
    CHECK(exact3->cmp(via_interval.lo()) >= 0);
    CHECK(exact3->cmp(via_interval.hi()) <= 0);
}

TEST_CASE("psi stays below mu/x^2 with certification") {
    for (std::size_t nu : {1u, 2u, 3u}) {
        QuadraticSurd mu = mu_constant(nu).mu;
        for (long x : {1L, 2L, 10L, 97L}) {
            RationalInterval psi = eval_psi_below_mu(mu, x);
            QuadraticSurd bound = mu * Rational(1, Int(x) * x);
            CHECK(bound.cmp(psi.hi()) > 0);
        }
    }
}

TEST_CASE("x^2 psi(x) approaches mu from below as x grows") {
    QuadraticSurd mu = mu_constant(1).mu;
    Rational prev(0);
    for (long x : {10L, 100L, 1000L}) {
        RationalInterval psi = eval_psi(mu, x, Rational(1, Int("100000000000000000000")));
        Rational scaled_lo = psi.lo() * Rational(Int(x) * x);
        Rational scaled_hi = psi.hi() * Rational(Int(x) * x);
        CHECK(scaled_lo > prev);       // monotone approach
        CHECK(mu.cmp(scaled_hi) > 0);  // always below mu
        CHECK(mu.cmp(scaled_lo + Rational(1, Int(x) * x)) < 0);  // and closing in
        prev = scaled_lo;
    }
}

TEST_CASE("psi input validation") {
    QuadraticSurd mu = mu_constant(1).mu;
    CHECK_THROWS_AS(eval_psi(mu, 0, Rational(1, 10)), InvalidArgument);
    CHECK_THROWS_AS(eval_psi(QuadraticSurd(Rational(2)), 1, Rational(1, 10)), InvalidArgument);
    // phi - 1 = (-1+sqrt 5)/2 is in (0,1) but has no rational square
    CHECK_THROWS_AS(eval_psi(QuadraticSurd(-1, 1, 2, 5), 1, Rational(1, 10)), InvalidArgument);
}

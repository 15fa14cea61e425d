#include <doctest.h>

#include <random>

#include "isoverify/rational.hpp"

using namespace isoverify;

TEST_CASE("canonical form identities") {
    CHECK(Rational(1, 2) == Rational(2, 4));
    CHECK(cmp(Rational(1, 2), Rational(2, 4)) == 0);
    CHECK(cmp(Rational(3, 7), Rational(1, 2)) < 0);
    CHECK(cmp(Rational(-1, 3), Rational(0)) < 0);

    CHECK(Rational(0, 17).den() == 1);
    CHECK(Rational(4, -6) == Rational(-2, 3));
    CHECK(Rational(4, -6).den() == 3);
}

TEST_CASE("floor and ceil round toward the right infinities") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(6, 3).floor() == 2);
    CHECK(Rational(6, 3).ceil() == 2);
}

TEST_CASE("arithmetic keeps lowest terms") {
    std::mt19937 rng(20240917);
    std::uniform_int_distribution<long> num(-60, 60);
    std::uniform_int_distribution<long> den(1, 60);
    for (int i = 0; i < 500; ++i) {
        Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        for (const Rational& r : {a + b, a - b, a * b}) {
            CHECK(gcd(abs(r.num()), r.den()) == 1);
            CHECK(r.den() >= 1);
        }
        if (!b.is_zero()) {
            Rational r = a / b;
            CHECK(gcd(abs(r.num()), r.den()) == 1);
            CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("division errors") {
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), DivisionByZero);
    CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZero);
}

TEST_CASE("string round trip") {
    CHECK(Rational(-3, 4).str() == "-3/4");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("+7") == Rational(7));
    CHECK(Rational::parse("355/113") == Rational(355, 113));

    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    for (int i = 0; i < 200; ++i) {
        Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("parse failures carry position") {
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("abc"), ParseError);
    CHECK_THROWS_AS(Rational::parse("3/"), ParseError);
    try {
        Rational::parse("12x/5");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
        CHECK(e.input() == "12x/5");
    }
}

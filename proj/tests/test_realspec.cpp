#include <doctest.h>

#include "isoverify/real_spec.hpp"

using namespace isoverify;

TEST_CASE("refinement of exact points is exact") {
    RealSpec third = RealSpec::rational(Rational(1, 3));
    RationalInterval iv = third.refine(Rational(1, 10));
    CHECK(iv.is_point());
    CHECK(iv.lo() == Rational(1, 3));
}

TEST_CASE("surd refinement brackets within the requested width") {
    RealSpec r2 = RealSpec::surd(QuadraticSurd::sqrt_of(2));
    RationalInterval iv = r2.refine(Rational(1, 10));
    CHECK(iv.width() <= Rational(1, 10));
    CHECK(QuadraticSurd::sqrt_of(2).cmp(iv.lo()) >= 0);
    CHECK(QuadraticSurd::sqrt_of(2).cmp(iv.hi()) <= 0);
}

TEST_CASE("stream refinement returns consecutive convergents of e") {
    // convergents of [2;1,2,1,1,4,...]: 2/1, 3/1, 8/3, 11/4, 19/7, 87/32;
    // the first consecutive pair with gap 1/(q q') <= 1/100 is (19/7, 87/32).
    RealSpec e = RealSpec::stream_e();
    RationalInterval iv = e.refine(Rational(1, 100));
    CHECK(iv.lo() == Rational(19, 7));
    CHECK(iv.hi() == Rational(87, 32));
    CHECK(iv.width() <= Rational(1, 100));
}

TEST_CASE("nested refinement produces nested intervals") {
    RealSpec e = RealSpec::stream_e();
    RealSpec r2 = RealSpec::surd(QuadraticSurd::sqrt_of(2));
    for (const RealSpec* s : {&e, &r2}) {
        Rational w(1, 10);
        RationalInterval prev = s->refine(w);
        for (int i = 0; i < 12; ++i) {
            w *= Rational(1, 7);
            RationalInterval next = s->refine(w);
            CHECK(prev.contains(next));
            prev = next;
        }
    }
}

TEST_CASE("certified comparison separates irrationals from rationals") {
    RealSpec e = RealSpec::stream_e();
    CHECK(e.certified_cmp(Rational(19, 7)) > 0);
    CHECK(e.certified_cmp(Rational(3)) < 0);
    CHECK(e.certified_cmp(Rational(2718281828, 1000000000)) > 0);
    RealSpec r = RealSpec::rational(Rational(1, 3));
    CHECK(r.certified_cmp(Rational(1, 3)) == 0);

    Budget starved;
    starved.max_refinements = 0;
    CHECK_THROWS_AS(e.certified_cmp(Rational(3), starved), Undecided);
}

TEST_CASE("floor of integer multiples") {
    RealSpec e = RealSpec::stream_e();
    CHECK(e.floor_times(1) == 2);
    CHECK(e.floor_times(7) == 19);   // 7e ~ 19.028
    CHECK(e.floor_times(100) == 271);
    RealSpec phi = RealSpec::surd(QuadraticSurd(1, 1, 2, 5));
    CHECK(phi.floor_times(5) == 8);  // 5 phi ~ 8.09
    RealSpec r = RealSpec::rational(Rational(7, 2));
    CHECK(r.floor_times(2) == 7);
}

TEST_CASE("malformed stream rules are rejected") {
    StreamRule bad{"bad", [](std::size_t n) { return Int(n == 0 ? 1 : 0); }};
    RealSpec s = RealSpec::stream(bad);
    CHECK_THROWS_AS(s.refine(Rational(1, 10)), InvalidArgument);
}

TEST_CASE("rational surds fold into the Rational variant") {
    RealSpec s = RealSpec::surd(QuadraticSurd(2, 3, 1, 1));
    CHECK(s.kind() == RealSpec::Kind::Rational);
    CHECK(s.rational_value() == Rational(5));
    CHECK(s.str() == "rat:5");
    CHECK(RealSpec::stream_e().str() == "stream:e");
    CHECK(RealSpec::surd(QuadraticSurd(1, 1, 2, 5)).str() == "surd:(1+sqrt(5))/2");
}

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>

#include "isoverify/markoff.hpp"

using namespace isoverify;

namespace {

// independent oracle: scan m1 >= m2 and solve the Markoff equation as a
// quadratic in m, keeping integer roots m >= m1 with m <= bound
std::set<std::array<std::uint64_t, 3>> brute_force_triples(std::uint64_t bound) {
    std::set<std::array<std::uint64_t, 3>> out;
    for (std::uint64_t m1 = 1; m1 <= bound; ++m1) {
        for (std::uint64_t m2 = 1; m2 <= m1; ++m2) {
            // m^2 - 3 m1 m2 m + (m1^2 + m2^2) = 0
            std::uint64_t b = 3 * m1 * m2;
            std::uint64_t c = m1 * m1 + m2 * m2;
            if (b * b < 4 * c) continue;
            std::uint64_t disc = b * b - 4 * c;
            auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(disc)));
            while (s > 0 && s * s > disc) --s;
            while ((s + 1) * (s + 1) <= disc) ++s;
            if (s * s != disc) continue;
            // s and b share parity, so both roots are integers
            for (std::uint64_t root : {(b - s) / 2, (b + s) / 2}) {
                if (root >= m1 && root <= bound && root * root + c == 3 * m1 * m2 * root)
                    out.insert({root, m1, m2});
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("triples up to small bounds") {
    auto t5 = markoff_triples(5);
    REQUIRE(t5.size() == 3);
    CHECK(t5[0] == MarkoffTriple{1, 1, 1});
    CHECK(t5[1] == MarkoffTriple{2, 1, 1});
    CHECK(t5[2] == MarkoffTriple{5, 2, 1});

    auto t34 = markoff_triples(34);
    REQUIRE(t34.size() == 6);
    CHECK(t34[3] == MarkoffTriple{13, 5, 1});
    CHECK(t34[4] == MarkoffTriple{29, 5, 2});
    CHECK(t34[5] == MarkoffTriple{34, 13, 1});

    CHECK(markoff_triples(1).size() == 1);
    for (const auto& t : t34) CHECK(t.satisfies_equation());
}

TEST_CASE("tree generation agrees with the brute-force scan") {
    const std::uint64_t bound = 10000;
    auto expected = brute_force_triples(bound);
    auto got = markoff_triples(Int(static_cast<unsigned long>(bound)));
    REQUIRE(got.size() == expected.size());
    for (const auto& t : got) {
        std::array<std::uint64_t, 3> key{t.m.get_ui(), t.m1.get_ui(), t.m2.get_ui()};
        CHECK(expected.count(key) == 1);
    }
}

TEST_CASE("the ordered Markoff numbers") {
    CHECK(markoff_numbers(1) == std::vector<Int>{1});
    CHECK(markoff_numbers(3) == std::vector<Int>{1, 2, 5});
    std::vector<Int> expected{1, 2, 5, 13, 29, 34, 89, 169, 194, 233, 433, 610, 985};
    CHECK(markoff_numbers(13) == expected);
    // cross-check the maxima against the brute-force scan up to 1000
    auto brute = brute_force_triples(1000);
    std::set<std::uint64_t> maxima;
    for (const auto& t : brute) maxima.insert(t[0]);
    std::vector<Int> from_brute(maxima.begin(), maxima.end());
    from_brute.resize(13);
    CHECK(markoff_numbers(13) == from_brute);
}

TEST_CASE("unicity holds across the generated range") {
    auto triples = markoff_triples(100000);
    std::set<std::uint64_t> maxima;
    for (const auto& t : triples) CHECK(maxima.insert(t.m.get_ui()).second);
}

TEST_CASE("spectrum constants as exact surds") {
    SpectrumConstant c1 = mu_constant(1);
    CHECK(c1.m == 1);
    CHECK(c1.mu == QuadraticSurd(0, 1, 5, 5));  // 1/sqrt 5 = sqrt 5 / 5

    SpectrumConstant c2 = mu_constant(2);
    CHECK(c2.m == 2);
    CHECK(c2.mu == QuadraticSurd(0, 1, 4, 2));  // 1/sqrt 8 = sqrt 2 / 4

    SpectrumConstant c3 = mu_constant(3);
    CHECK(c3.m == 5);
    CHECK(c3.mu == QuadraticSurd(0, 5, 221, 221));  // 5/sqrt 221
}

TEST_CASE("mu satisfies its defining identity and the global bounds") {
    Rational prev_sq(1);  // mu_0 stand-in: anything > mu_1^2
    for (std::size_t nu = 1; nu <= 25; ++nu) {
        SpectrumConstant c = mu_constant(nu);
        Rational sq = *c.mu.rational_square();
        // mu^2 (9 m^2 - 4) = m^2, exactly
        CHECK(sq * Rational(9 * c.m * c.m - 4) == Rational(c.m * c.m));
        CHECK(c.mu.sign() > 0);
        // strictly decreasing (compare squares; all values positive)
        CHECK(sq < prev_sq);
        prev_sq = sq;
        // 1/3 < mu <= 1/sqrt 5
        CHECK(sq > Rational(1, 9));
        CHECK(sq <= Rational(1, 5));
    }
}

TEST_CASE("input contracts") {
    CHECK_THROWS_AS(markoff_triples(0), InvalidArgument);
    CHECK_THROWS_AS(markoff_numbers(0), InvalidArgument);
    CHECK_THROWS_AS(mu_constant(0), InvalidArgument);
}

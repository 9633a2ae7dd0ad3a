#include "wilf/series.hpp"

#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

using namespace wilf;

namespace {

Series S(std::vector<Integer> c, int order) { return Series(std::move(c), order); }

std::vector<Integer> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

Series random_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> d(-5, 5);
    std::vector<Integer> c;
    for (int k = 0; k <= order; ++k) c.emplace_back(d(rng));
    return S(std::move(c), order);
}

}  // namespace

TEST_CASE("series ring operations") {
    CHECK(S({1, 1}, 4) * S({1, -1}, 4) == S({1, 0, -1}, 4));
    CHECK(reciprocal(S({1, -1}, 5)) == S({1, 1, 1, 1, 1, 1}, 5));
    CHECK(Series::monomial(1, 3) + Series::monomial(1, 3) == S({0, 2}, 3));
    CHECK(reciprocal(S({-1, 1}, 3)) == S({-1, -1, -1, -1}, 3));
    CHECK_THROWS_WITH_AS(reciprocal(S({2, 1}, 3)), "non-invertible series", std::domain_error);
    CHECK_THROWS_AS(reciprocal(S({0, 1}, 3)), std::domain_error);
    CHECK(S({1, 2, 3}, 2).to_string() == "1, 2, 3");
}

TEST_CASE("orders never grow") {
    const Series a = S({1, 1, 1, 1, 1}, 4);
    const Series b = S({1, 2}, 2);
    CHECK((a + b).order() == 2);
    CHECK((a * b).order() == 2);
    CHECK((b - a).order() == 2);
    CHECK(a.truncate(1) == S({1, 1}, 1));
    CHECK(a.truncate(9).order() == 4);
    CHECK(S({1, 2, 3, 4}, 1).coeffs().size() == 2);
}

TEST_CASE("multiplication is commutative and associative") {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 200; ++trial) {
        const Series a = random_series(rng, 7);
        const Series b = random_series(rng, 6);
        const Series c = random_series(rng, 8);
        REQUIRE(a * b == b * a);
        REQUIRE((a * b) * c == a * (b * c));
        REQUIRE(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("reciprocal inverts units") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Integer> c = random_series(rng, 9).coeffs();
        c[0] = trial % 2 == 0 ? 1 : -1;
        const Series a = S(c, 9);
        REQUIRE(a * reciprocal(a) == Series::one(9));
    }
}

TEST_CASE("rational expansion") {
    CHECK(expand_rational(ints({1, -2}), ints({1, -4, 2}), 4) == S({1, 2, 6, 20, 68}, 4));
    CHECK(expand_rational(ints({1}), ints({1, -1}), 3) == S({1, 1, 1, 1}, 3));
    // x + x^2 + 2x^3/(1-x) = (x + x^3)/(1-x)
    CHECK(expand_rational(ints({0, 1, 0, 1}), ints({1, -1}), 5) == S({0, 1, 1, 2, 2, 2}, 5));
    CHECK_THROWS_AS(expand_rational(ints({1}), ints({0, 1}), 3), std::domain_error);
    CHECK_THROWS_AS(expand_rational(ints({1}), ints({2, 1}), 3), std::domain_error);

    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        auto numer = random_series(rng, 4).coeffs();
        auto denom = random_series(rng, 3).coeffs();
        denom[0] = 1;
        const Series q = expand_rational(numer, denom, 12);
        REQUIRE(q * S(denom, 12) == S(numer, 12));
    }
}

TEST_CASE("class series satisfies its recurrence") {
    const Series c = x_class_series(30);
    for (int n = 2; n <= 30; ++n) REQUIRE(c[n] == 4 * c[n - 1] - 2 * c[n - 2]);
    CHECK(c[30] > Integer(std::numeric_limits<std::uint64_t>::max() / 1000000));
}

TEST_CASE("partition key series") {
    const Series p = partition_key_series(12);
    CHECK(p[0] == 0);
    CHECK(p[1] == 0);
    CHECK(p[2] == 1);
    CHECK(p[3] == 2);
    CHECK(p[4] == 5);

    // Direct product: x^2/(1-x) * prod_i (1-x^i)^{-ceil((i+1)/2)}.
    Series direct = expand_rational(ints({0, 0, 1}), ints({1, -1}), 12);
    for (int i = 1; i <= 12; ++i) {
        std::vector<Integer> factor(static_cast<std::size_t>(i) + 1);
        factor[0] = 1;
        factor[static_cast<std::size_t>(i)] = -1;
        const Series inv = reciprocal(S(factor, 12));
        const int colours = static_cast<int>(std::ceil((i + 1) / 2.0));
        for (int r = 0; r < colours; ++r) direct = direct * inv;
    }
    CHECK(p == direct);
}

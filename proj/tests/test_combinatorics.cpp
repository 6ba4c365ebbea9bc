#include <catch2/catch.hpp>

#include "gibon/combinatorics.hpp"
#include "gibon/natural.hpp"
#include "oracles.hpp"

using gibon::binomial;
using gibon::BinomialTable;
using gibon::hockey_stick_sum;
using gibon::Natural;

TEST_CASE("binomial boundary conventions") {
    CHECK(binomial(4, 2) == Natural{6});
    CHECK(binomial(0, 0) == Natural{1});
    CHECK(binomial(5, -1) == Natural{0});
    CHECK(binomial(5, 6) == Natural{0});
    CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
    CHECK_THROWS_AS(binomial(-3, -5), std::domain_error);
}

TEST_CASE("binomial agrees with the choose-or-skip recursion oracle") {
    for (int n = 0; n <= 16; ++n) {
        for (int k = -1; k <= n + 1; ++k) {
            CHECK(binomial(n, k) == Natural{oracle::choose_by_recursion(n, k)});
        }
    }
}

TEST_CASE("hockey-stick sum: examples frozen from the summation oracle") {
    CHECK(oracle::hockey_stick_by_summation(1, 3) == 10);
    CHECK(hockey_stick_sum(1, 3) == Natural{10});
    CHECK(hockey_stick_sum(0, 0) == Natural{1});
    CHECK(oracle::hockey_stick_by_summation(2, 4) == 35);
    CHECK(hockey_stick_sum(2, 4) == Natural{35});
    CHECK(hockey_stick_sum(2, 4) == binomial(7, 3));
    CHECK_THROWS_AS(hockey_stick_sum(-1, 0), std::domain_error);
    CHECK_THROWS_AS(hockey_stick_sum(0, -1), std::domain_error);
}

TEST_CASE("hockey-stick identity holds on the full grid") {
    for (int k = 0; k <= 12; ++k) {
        for (int n = 0; n <= 60; ++n) {
            INFO("k=" << k << " n=" << n);
            REQUIRE(hockey_stick_sum(k, n) == binomial(k + n + 1, k + 1));
        }
    }
}

TEST_CASE("binomial symmetry and row sums") {
    for (int n = 0; n <= 60; ++n) {
        Natural row_sum;
        for (int k = 0; k <= n; ++k) {
            row_sum += binomial(n, k);
            REQUIRE(binomial(n, k) == binomial(n, n - k));
        }
        Natural pow2{1};
        for (int i = 0; i < n; ++i) pow2.mul_small(2);
        REQUIRE(row_sum == pow2);
    }
}

TEST_CASE("Pascal table agrees with the multiplicative path") {
    BinomialTable table(60);
    for (int n = 0; n <= 60; ++n) {
        for (int k = -1; k <= n + 1; ++k) {
            REQUIRE(table.entry(n, k) == binomial(n, k));
        }
    }
}

TEST_CASE("Pascal table is append-only under growth") {
    BinomialTable table(10);
    std::vector<Natural> snapshot;
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) snapshot.push_back(table.entry(n, k));
    }
    table.extend_to(25);
    std::size_t i = 0;
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            REQUIRE(table.entry(n, k) == snapshot[i++]);
        }
    }
    CHECK(table.max_n() == 25);
    CHECK_THROWS_AS(table.entry(26, 3), std::out_of_range);
    CHECK_THROWS_AS(table.entry(-1, 0), std::domain_error);
}

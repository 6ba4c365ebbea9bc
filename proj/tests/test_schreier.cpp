#include <catch2/catch.hpp>

#include <map>
#include <sstream>
#include <tuple>
#include <vector>

#include "gibon/natural.hpp"
#include "gibon/partial_sums.hpp"
#include "gibon/schreier.hpp"
#include "gibon/sequences.hpp"
#include "oracles.hpp"

using gibon::brute_force_colored_count;
using gibon::collect_colored;
using gibon::ColorClass;
using gibon::ColoredSchreierSet;
using gibon::count_fixed_size;
using gibon::CountQuery;
using gibon::gibonacci;
using gibon::GibonacciSeed;
using gibon::MinRelation;
using gibon::Natural;
using gibon::PartialSumTable;
using gibon::s_colored;
using gibon::s_decrement_residual;

namespace {

const std::vector<GibonacciSeed> kBattery = {
    GibonacciSeed{Natural{1}, Natural{1}},
    GibonacciSeed{Natural{1}, Natural{2}},
    GibonacciSeed{Natural{3}, Natural{2}},
    GibonacciSeed{Natural{7}, Natural{5}},
};

} // namespace

TEST_CASE("count_fixed_size: frozen examples and subset-scan oracle") {
    CHECK(count_fixed_size(6, 2, MinRelation::Exceeds) == Natural{6});
    CHECK(oracle::subsets_with_min_relation(6, 2, false) == 6);
    CHECK(count_fixed_size(6, 2, MinRelation::Equals) == Natural{4});
    CHECK(oracle::subsets_with_min_relation(6, 2, true) == 4);
    CHECK(count_fixed_size(6, 4, MinRelation::Exceeds) == Natural{0});
    CHECK_THROWS_AS(count_fixed_size(0, 1, MinRelation::Equals), std::domain_error);
    CHECK_THROWS_AS(count_fixed_size(3, 0, MinRelation::Equals), std::domain_error);

    for (int n = 1; n <= 10; ++n) {
        for (int ell = 1; ell <= 7; ++ell) {
            INFO("n=" << n << " ell=" << ell);
            REQUIRE(count_fixed_size(n, ell, MinRelation::Equals) ==
                    Natural{oracle::subsets_with_min_relation(n, ell, true)});
            REQUIRE(count_fixed_size(n, ell, MinRelation::Exceeds) ==
                    Natural{oracle::subsets_with_min_relation(n, ell, false)});
        }
    }
}

TEST_CASE("s_colored: frozen examples") {
    CHECK(s_colored(CountQuery{6, 2, GibonacciSeed{Natural{3}, Natural{2}}}) == Natural{35});
    CHECK(s_colored(CountQuery{6, 3, GibonacciSeed::fibonacci()}) == Natural{4});
    CHECK_THROWS_AS(CountQuery(0, 0, GibonacciSeed::fibonacci()), std::domain_error);
    CHECK_THROWS_AS(CountQuery(3, -1, GibonacciSeed::fibonacci()), std::domain_error);
}

TEST_CASE("s_colored at n=4, k=0 equals the oracle output 19 = G_6") {
    const GibonacciSeed seed{Natural{3}, Natural{2}};
    const CountQuery query{4, 0, seed};
    const Natural oracle_count = brute_force_colored_count(query);
    CHECK(oracle_count == Natural{19});
    CHECK(s_colored(query) == oracle_count);
    CHECK(gibonacci(seed, 6) == Natural{19});
}

TEST_CASE("brute-force oracle: Fibonacci seed reproduces F_{n+2}") {
    const CountQuery query{3, 0, GibonacciSeed::fibonacci()};
    CHECK(brute_force_colored_count(query) == Natural{5}); // empty,{1},{2},{3},{2,3}
    CHECK(brute_force_colored_count(CountQuery{6, 3, GibonacciSeed::fibonacci()}) == Natural{4});
    CHECK(brute_force_colored_count(CountQuery{6, 2, GibonacciSeed{Natural{3}, Natural{2}}}) ==
          Natural{35});
    CHECK_THROWS_AS(brute_force_colored_count(CountQuery{25, 0, GibonacciSeed::fibonacci()}),
                    std::domain_error);
}

TEST_CASE("formula equals oracle across the battery") {
    for (const auto& seed : kBattery) {
        for (int n = 1; n <= 18; ++n) {
            for (int k = 0; k <= (n + 1) / 2 + 1; ++k) {
                INFO("seed=" << seed.to_string() << " n=" << n << " k=" << k);
                REQUIRE(s_colored(CountQuery{n, k, seed}) ==
                        brute_force_colored_count(CountQuery{n, k, seed}));
            }
        }
    }
}

TEST_CASE("monochrome seed reduces to the plain Schreier count") {
    const GibonacciSeed fib = GibonacciSeed::fibonacci();
    for (int n = 1; n <= 14; ++n) {
        for (int k = 0; k <= (n + 1) / 2 + 1; ++k) {
            REQUIRE(s_colored(CountQuery{n, k, fib}) ==
                    Natural{oracle::plain_schreier_count(n, k)});
        }
    }
}

TEST_CASE("enumeration: full listing for n=6, k=2, seed (3,2)") {
    const GibonacciSeed seed{Natural{3}, Natural{2}};
    const auto sets = collect_colored(CountQuery{6, 2, seed});
    REQUIRE(sets.size() == 35);

    std::map<std::vector<int>, std::vector<std::uint64_t>> by_elements;
    std::map<std::vector<int>, ColorClass> class_of;
    for (const auto& s : sets) {
        gibon::validate(s, seed);
        by_elements[s.elements].push_back(s.color_index);
        class_of[s.elements] = s.color_class;
    }
    // 24 two-element and 11 three-element colored sets over 14 distinct sets.
    REQUIRE(by_elements.size() == 14);
    const std::vector<std::vector<int>> g1_sets = {
        {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 4, 5}, {3, 4, 6}, {3, 5, 6}};
    const std::vector<std::vector<int>> g2_sets = {
        {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}, {4, 5, 6}};
    for (const auto& elements : g1_sets) {
        INFO("elements " << elements.front());
        REQUIRE(class_of.at(elements) == ColorClass::MinEqualsSize);
        REQUIRE(by_elements.at(elements) == std::vector<std::uint64_t>{0, 1, 2});
    }
    for (const auto& elements : g2_sets) {
        REQUIRE(class_of.at(elements) == ColorClass::MinExceedsSize);
        REQUIRE(by_elements.at(elements) == std::vector<std::uint64_t>{0, 1});
    }

    // Order: size-major, then lexicographic elements, then color index.
    CHECK(sets[0].elements == std::vector<int>{2, 3});
    CHECK(sets[0].color_index == 0);
    CHECK(sets[1].elements == std::vector<int>{2, 3});
    CHECK(sets[1].color_index == 1);
    CHECK(sets[3].elements == std::vector<int>{2, 4});
    for (std::size_t i = 1; i < sets.size(); ++i) {
        const auto key = [](const ColoredSchreierSet& s) {
            return std::make_tuple(s.elements.size(), s.elements, s.color_index);
        };
        REQUIRE(key(sets[i - 1]) < key(sets[i]));
    }
}

TEST_CASE("enumeration: edge cases") {
    const auto single = collect_colored(CountQuery{1, 1, GibonacciSeed::fibonacci()});
    REQUIRE(single.size() == 1);
    CHECK(single[0].elements == std::vector<int>{1});
    CHECK(single[0].color_class == ColorClass::MinEqualsSize);
    CHECK(single[0].color_index == 0);

    CHECK(collect_colored(CountQuery{6, 4, GibonacciSeed{Natural{3}, Natural{2}}}).empty());

    // k = 0 starts with the empty set, weighted by the G_2 palette.
    const auto with_empty = collect_colored(CountQuery{2, 0, GibonacciSeed{Natural{3}, Natural{2}}});
    REQUIRE(with_empty.size() >= 2);
    CHECK(with_empty[0].elements.empty());
    CHECK(with_empty[0].color_class == ColorClass::MinExceedsSize);
    CHECK(with_empty[0].color_index == 0);
    CHECK(with_empty[1].elements.empty());
    CHECK(with_empty[1].color_index == 1);
}

TEST_CASE("enumeration length always equals s_colored") {
    for (const auto& seed : kBattery) {
        for (int n = 1; n <= 12; ++n) {
            for (int k = 0; k <= (n + 1) / 2 + 1; ++k) {
                const CountQuery query{n, k, seed};
                std::uint64_t count = 0;
                gibon::enumerate_colored(query, [&](const ColoredSchreierSet& s) {
                    gibon::validate(s, seed);
                    ++count;
                });
                REQUIRE(Natural{count} == s_colored(query));
            }
        }
    }
}

TEST_CASE("decrement residual: frozen examples and the full identity") {
    const GibonacciSeed seed{Natural{3}, Natural{2}};
    CHECK(s_decrement_residual(CountQuery{6, 2, seed}) == Natural{24}); // 12 + 12
    CHECK(s_colored(CountQuery{6, 3, seed}) == Natural{11});
    CHECK(s_decrement_residual(CountQuery{6, 0, seed}) == Natural{2}); // the empty-set weight
    CHECK(s_decrement_residual(CountQuery{6, 3, GibonacciSeed::fibonacci()}) == Natural{4});
    CHECK(s_colored(CountQuery{6, 4, GibonacciSeed::fibonacci()}) == Natural{0});

    for (const auto& battery_seed : kBattery) {
        for (int n = 1; n <= 20; ++n) {
            for (int k = 0; k <= (n + 1) / 2 + 1; ++k) {
                const CountQuery query{n, k, battery_seed};
                INFO("seed=" << battery_seed.to_string() << " n=" << n << " k=" << k);
                REQUIRE(s_colored(CountQuery{n, k + 1, battery_seed}) +
                            s_decrement_residual(query) ==
                        s_colored(query));
            }
        }
    }
}

TEST_CASE("equivalence with the partial-sum table") {
    for (const auto& seed : kBattery) {
        PartialSumTable table(seed);
        for (int n = 1; n <= 40; ++n) {
            REQUIRE(s_colored(CountQuery{n, 0, seed}) == gibonacci(seed, n + 2));
            for (int k = 1; k <= (n + 1) / 2; ++k) {
                INFO("seed=" << seed.to_string() << " n=" << n << " k=" << k);
                REQUIRE(s_colored(CountQuery{n, k, seed}) == table.at(k, n - 2 * (k - 1)));
            }
        }
    }
}

TEST_CASE("colored set validation rejects broken invariants") {
    const GibonacciSeed seed{Natural{3}, Natural{2}};
    // min < size violates the Schreier condition.
    CHECK_THROWS_AS(
        gibon::validate(ColoredSchreierSet{{1, 2}, ColorClass::MinEqualsSize, 0}, seed),
        std::domain_error);
    // Class must match min-vs-size.
    CHECK_THROWS_AS(
        gibon::validate(ColoredSchreierSet{{2, 3}, ColorClass::MinExceedsSize, 0}, seed),
        std::domain_error);
    // Color index must be inside the palette (G_2 = 2 here).
    CHECK_THROWS_AS(
        gibon::validate(ColoredSchreierSet{{3, 4}, ColorClass::MinExceedsSize, 2}, seed),
        std::domain_error);
    // Elements must be strictly increasing and positive.
    CHECK_THROWS_AS(
        gibon::validate(ColoredSchreierSet{{3, 3}, ColorClass::MinExceedsSize, 0}, seed),
        std::domain_error);
    CHECK_THROWS_AS(
        gibon::validate(ColoredSchreierSet{{0, 4}, ColorClass::MinExceedsSize, 0}, seed),
        std::domain_error);
    // The empty set is valid in the MinExceedsSize class.
    gibon::validate(ColoredSchreierSet{{}, ColorClass::MinExceedsSize, 1}, seed);
}

TEST_CASE("JSON-lines export") {
    CHECK(gibon::to_json_line(ColoredSchreierSet{{2, 3}, ColorClass::MinEqualsSize, 2}) ==
          "{\"elements\":[2,3],\"color_class\":\"min_equals_size\",\"color_index\":2}");
    CHECK(gibon::to_json_line(ColoredSchreierSet{{}, ColorClass::MinExceedsSize, 0}) ==
          "{\"elements\":[],\"color_class\":\"min_exceeds_size\",\"color_index\":0}");

    std::ostringstream out;
    gibon::write_sets_jsonl(out, CountQuery{1, 1, GibonacciSeed::fibonacci()});
    CHECK(out.str() ==
          "{\"elements\":[1],\"color_class\":\"min_equals_size\",\"color_index\":0}\n"
          "{\"total\":1}\n");
}

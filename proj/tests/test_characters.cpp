#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "motcalc/characters.hpp"

using namespace motcalc;

TEST_CASE("construction validates its inputs") {
    CHECK_NOTHROW(make_relation_subgroup(2, {1, -1}));
    CHECK_NOTHROW(make_relation_subgroup(9, {1, 1, 1, -1}));
    CHECK_THROWS_AS(make_relation_subgroup(1, {1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(make_relation_subgroup(0, {1}), std::invalid_argument);
    CHECK_THROWS_AS(make_relation_subgroup(-3, {1}), std::invalid_argument);
    CHECK_THROWS_AS(make_relation_subgroup(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(make_relation_subgroup(3, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_relation_subgroup(3, {1, 0, -1}), std::invalid_argument);
}

TEST_CASE("group order is m^(n-1)") {
    CHECK(make_relation_subgroup(2, {1}).order() == 1);
    CHECK(make_relation_subgroup(3, {1, -1}).order() == 3);
    CHECK(make_relation_subgroup(9, {1, 1, -1}).order() == 81);
    CHECK(make_relation_subgroup(7, {1, 1, 1, 1, -1}).order() == 2401);
    // Big enough to overflow 64 bits: 9^25.
    RelationSubgroup big = make_relation_subgroup(9, std::vector<int>(26, 1));
    Int expect = 1;
    for (int i = 0; i < 25; ++i) expect *= 9;
    CHECK(big.order() == expect);
}

TEST_CASE("element enumeration is complete, lexicographic and capped") {
    RelationSubgroup G = make_relation_subgroup(3, {1, 1, -1});
    auto els = enumerate_elements(G);
    REQUIRE(els.size() == 9);
    // Every element satisfies the relation; all are distinct.
    std::set<std::vector<long>> seen;
    for (const auto& h : els) {
        REQUIRE(h.size() == 3);
        long s = 0;
        for (size_t j = 0; j < 3; ++j) s += G.signs[j] * h[j];
        CHECK(((s % 3) + 3) % 3 == 0);
        seen.insert(h);
    }
    CHECK(seen.size() == 9);
    // Lexicographic in the first n-1 coordinates.
    for (size_t i = 1; i < els.size(); ++i)
        CHECK(std::vector<long>(els[i - 1].begin(), els[i - 1].end() - 1) <
              std::vector<long>(els[i].begin(), els[i].end() - 1));
    CHECK(els.front() == std::vector<long>{0, 0, 0});
    CHECK(els.back() == std::vector<long>{2, 2, 1});

    // The cap triggers with a size-aware message.
    RelationSubgroup huge = make_relation_subgroup(9, std::vector<int>(10, 1));
    CHECK_THROWS_AS(enumerate_elements(huge, 1000), std::length_error);
    CHECK_NOTHROW(enumerate_elements(make_relation_subgroup(2, {1, -1}), 2));
}

TEST_CASE("annihilator consists of the multiples of the sign vector") {
    RelationSubgroup G = make_relation_subgroup(5, {1, -1, 1});
    auto ann = annihilator(G);
    REQUIRE(ann.size() == 5);
    for (long t = 0; t < 5; ++t) {
        CharacterVector expect = {((t % 5) + 5) % 5, ((-t % 5) + 5) % 5,
                                  ((t % 5) + 5) % 5};
        CHECK(ann[static_cast<size_t>(t)] == expect);
    }
    // Each annihilator character really does vanish on every group element.
    auto els = enumerate_elements(G);
    for (const auto& chi : ann)
        for (const auto& h : els) {
            long s = 0;
            for (size_t j = 0; j < chi.size(); ++j) s += chi[j] * h[j];
            CHECK(((s % 5) + 5) % 5 == 0);
        }
}

TEST_CASE("closed-form invariance matches the explicit character sum") {
    std::mt19937 rng(20260824);
    for (int trial = 0; trial < 60; ++trial) {
        long m = 2 + static_cast<long>(rng() % 8);       // 2..9
        size_t n = 1 + static_cast<size_t>(rng() % 4);   // 1..4
        std::vector<int> signs(n);
        for (auto& s : signs) s = (rng() % 2 == 0) ? 1 : -1;
        RelationSubgroup G = make_relation_subgroup(m, signs);
        CharacterVector chi(n);
        for (auto& c : chi) c = static_cast<long>(rng() % static_cast<unsigned>(m));
        bool inv = is_invariant_character(G, chi);
        CycInt s = character_sum(G, chi);
        // Invariant characters sum to |G|; non-invariant characters sum to 0.
        if (inv)
            CHECK(s == CycInt::integer(m, G.order()));
        else
            CHECK(s.is_zero());
    }
}

TEST_CASE("invariance test validates the character length") {
    RelationSubgroup G = make_relation_subgroup(3, {1, -1});
    CHECK(is_invariant_character(G, {1, 2}));
    CHECK(is_invariant_character(G, {0, 0}));
    CHECK(!is_invariant_character(G, {1, 1}));
    CHECK_THROWS_AS(is_invariant_character(G, {1}), std::invalid_argument);
    CHECK_THROWS_AS(is_invariant_character(G, {1, 2, 0}), std::invalid_argument);
}

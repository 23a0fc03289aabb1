#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "toric_local.hpp"

using motcalc::Int;
using motcalc::LefschetzSum;
using namespace motcalc::toric;

namespace {
LefschetzSum ls(std::initializer_list<std::pair<long, long>> v) {
    LefschetzSum r;
    for (auto [k, c] : v)
        if (c != 0) r[k] = c;
    return r;
}
}  // namespace

TEST_CASE("single-level surface patterns") {
    // transverse A2 pattern: crepant, one exceptional class contracted
    auto a2 = run_tower({3, 6}, 1, {}, {}, "a2");
    CHECK(a2.level_delta[0] == ls({{1, 2}}));

    // non-Gorenstein pattern: a single exceptional curve, nothing contracts
    auto ng2 = run_tower({3, 3}, 1, {}, {}, "ng2");
    CHECK(ng2.level_delta[0] == ls({{1, 1}}));
}

TEST_CASE("single-level threefold patterns") {
    // diagonal pattern: one exceptional plane
    auto g3 = run_tower({3, 3, 3}, 1, {}, {}, "g3");
    CHECK(g3.level_delta[0] == ls({{1, 1}, {2, 1}}));

    // mixed pattern: two exceptional components worth of classes
    auto ng3 = run_tower({3, 6, 6}, 1, {}, {}, "ng3");
    CHECK(ng3.level_delta[0] == ls({{1, 2}, {2, 2}}));
}

TEST_CASE("two-level surface towers and chain lengths") {
    // weights with (alpha + beta)/3 = 0 mod 3: the full chain of 8 curves
    for (auto [a, b] : {std::pair<long, long>{1, 8}, {4, 5}}) {
        auto t = run_tower({a, b}, 2, {}, {}, "chain");
        CHECK(t.level_delta[0] == ls({{1, 2}}));
        CHECK(t.level_delta[1] == ls({{1, 6}}));
    }
    // the short chains: 3 curves total
    for (auto [a, b] : {std::pair<long, long>{1, 5}, {4, 8}}) {
        auto t = run_tower({a, b}, 2, {}, {}, "short");
        CHECK(t.level_delta[0] == ls({{1, 2}}));
        CHECK(t.level_delta[1] == ls({{1, 1}}));
    }
}

TEST_CASE("two-level output fixed locus on the long chain") {
    auto t = run_tower({1, 8}, 2, {1, 0}, {}, "chain-out");
    // expected: two pointwise cube-fixed curves with two finer-fixed corners
    // each, and three isolated cube-fixed points that are finely fixed
    int curves = 0, pts = 0;
    std::multiset<std::pair<long, long>> pt_w9, corner_w9;
    for (const auto& c : t.out_components) {
        if (c.dim == 1) {
            ++curves;
            CHECK(c.motive == ls({{0, 1}, {1, 1}}));
            CHECK(c.weights3 == std::vector<long>{1});
            CHECK(!c.pointwise_fine);
            CHECK(c.fine_pts.size() == 2);
            for (const auto& p : c.fine_pts) {
                REQUIRE(p.tangent9.size() == 1);
                REQUIRE(p.transverse9.size() == 1);
                corner_w9.insert({p.tangent9[0], p.transverse9[0]});
            }
        } else {
            ++pts;
            CHECK(c.dim == 0);
            CHECK(c.motive == ls({{0, 1}}));
            CHECK(c.weights3 == std::vector<long>({2, 2}));
            CHECK(c.pointwise_fine);
            REQUIRE(c.fine_weights9.size() == 2);
            std::pair<long, long> w{c.fine_weights9[0], c.fine_weights9[1]};
            if (w.first > w.second) std::swap(w.first, w.second);
            pt_w9.insert(w);
        }
    }
    CHECK(curves == 2);
    CHECK(pts == 3);
    CHECK(pt_w9 == std::multiset<std::pair<long, long>>{{2, 8}, {2, 8}, {5, 5}});
    CHECK(corner_w9 ==
          std::multiset<std::pair<long, long>>{{3, 7}, {3, 7}, {6, 4}, {6, 4}});
}

TEST_CASE("codimension-one towers are trivial") {
    auto t = run_tower({3}, 1, {}, {}, "cod1");
    CHECK(t.level_delta[0].empty());
}

TEST_CASE("trivial level is skipped") {
    // exponents divisible by 3: the cube acts trivially, only level 1 acts
    auto t = run_tower({3, 6}, 2, {}, {}, "triv0");
    CHECK(t.level_delta[0].empty());
    CHECK(t.level_delta[1] == ls({{1, 2}}));
}

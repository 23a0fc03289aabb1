#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motcalc/oracle.hpp"

using namespace motcalc;

namespace {

HodgeDiamond k3() {
    HodgeDiamond D;
    D.dim = 2;
    D.add(0, 0, 1);
    D.add(2, 0, 1);
    D.add(0, 2, 1);
    D.add(1, 1, 20);
    D.add(2, 2, 1);
    D.add(2, 1, 0);
    return D;
}

}  // namespace

TEST_CASE("orbifold diamond of the order-2 surface quotient is a K3") {
    CurveAction E = builtin_curve(CurveKind::hyperelliptic_involution, 1);
    RelationSubgroup G = make_relation_subgroup(2, {1, -1});
    HodgeDiamond D = chen_ruan_diamond({E, E}, G);
    CHECK(D.dim == 2);
    CHECK(D == k3());
    CHECK(D.at(1, 0) == 0);
    CHECK(D.at(0, 1) == 0);
}

TEST_CASE("orbifold diamond of the order-3 surface quotient is a K3") {
    CurveAction F = builtin_curve(CurveKind::mu_curve, 1);
    RelationSubgroup G = make_relation_subgroup(3, {1, 1});
    HodgeDiamond D = chen_ruan_diamond({F, F}, G);
    CHECK(D == k3());
}

TEST_CASE("non-Gorenstein quotients are rejected by name") {
    // With opposite signs the group contains (1,1), which acts with
    // determinant zeta^2 != 1 on the surface, so its sector has fractional age.
    CurveAction F = builtin_curve(CurveKind::mu_curve, 1);
    RelationSubgroup G = make_relation_subgroup(3, {1, -1});
    bool named = false;
    try {
        chen_ruan_diamond({F, F}, G);
    } catch (const std::domain_error& e) {
        named = std::string(e.what()).find("non-Gorenstein sector") != std::string::npos;
    }
    CHECK(named);
}

TEST_CASE("size caps abort both oracles with length errors") {
    CurveAction F = builtin_curve(CurveKind::mu_curve, 4);  // modulus 9
    RelationSubgroup G = make_relation_subgroup(9, {1, 1, 1, -1});

    OracleCaps tiny;
    tiny.group_cap = 10;  // |G| = 729
    CHECK_THROWS_AS(chen_ruan_diamond({F, F, F, F}, G, tiny), std::length_error);

    TranscendentalBlock B;
    B.modulus = 9;
    B.factors = {F, F, F, F};
    B.signs = {1, 1, 1, -1};
    CHECK_THROWS_AS(bruteforce_block_hodge(B, tiny), std::length_error);

    OracleCaps few;
    few.assignment_cap = 10;  // 8^4 line assignments
    CHECK_THROWS_AS(bruteforce_block_hodge(B, few), std::length_error);

    CHECK_NOTHROW(bruteforce_block_hodge(B));
}

TEST_CASE("brute-force block realization on a known corner block") {
    // Four order-3 elliptic factors with aligned relation signs: the
    // invariant lines sit only at the Hodge corners.
    CurveAction F = builtin_curve(CurveKind::mu_curve, 1);
    TranscendentalBlock B;
    B.modulus = 3;
    B.factors = {F, F, F, F};
    B.signs = {1, 1, 1, 1};
    auto tr = bruteforce_block_hodge(B);
    CHECK(tr[4] == 1);
    CHECK(tr[0] == 1);
    CHECK(tr[1] == 0);
    CHECK(tr[2] == 0);
    CHECK(tr[3] == 0);
}

TEST_CASE("orbifold diamonds satisfy Hodge and Serre symmetry") {
    CurveAction E = builtin_curve(CurveKind::hyperelliptic_involution, 2);
    RelationSubgroup G = make_relation_subgroup(2, {1, 1, -1});
    HodgeDiamond D = chen_ruan_diamond({E, E, E}, G);
    CHECK(D.dim == 3);
    CHECK(D.at(0, 0) == 1);
    for (long p = 0; p <= 3; ++p)
        for (long q = 0; q <= 3; ++q) {
            CHECK(D.at(p, q) == D.at(q, p));
            CHECK(D.at(p, q) == D.at(3 - p, 3 - q));
        }
}

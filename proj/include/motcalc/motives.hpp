/**
 * @file motives.hpp
 * @brief Exact formal motive algebra: Lefschetz sums plus transcendental
 *        tensor blocks, with Hodge realization.
 *
 * A MotiveExpr is a finite sum of Tate twists of the unit motive together
 * with "transcendental blocks": invariant parts of tensor products of the
 * degree-1 motives of curves-with-automorphisms under a relation subgroup.
 * Blocks are kept unexpanded (factor curves + signs); their Hodge numbers
 * are computed by a polynomial-product formula in block_hodge, with a
 * brute-force line enumeration living only in the oracle module.
 */

#pragma once

#include <map>
#include <string>
#include <vector>

#include "motcalc/characters.hpp"
#include "motcalc/curves.hpp"

namespace motcalc {

/// Finitely supported map twist k >= 0 -> multiplicity.
using LefschetzSum = std::map<long, Int>;

/// Invariant part of h^1(C_1) x ... x h^1(C_n) under the relation subgroup
/// with the given signs, optionally Tate-twisted.
struct TranscendentalBlock {
    std::vector<CurveAction> factors;
    std::vector<int> signs;      ///< length = factor count, entries +-1
    long modulus = 0;
    Int multiplicity = 1;
    long twist = 0;

    size_t weight() const { return factors.size(); }  ///< cohomological degree - 2*twist
};

struct MotiveExpr {
    LefschetzSum lefschetz;
    std::vector<TranscendentalBlock> blocks;
    long ambient_dim = 0;
};

struct HodgeDiamond {
    long dim = 0;
    std::map<std::pair<long, long>, Int> h;  ///< (p,q) -> hodge number

    Int at(long p, long q) const;
    void add(long p, long q, const Int& v);
    bool operator==(const HodgeDiamond& o) const;
};

/// Total space motive of (C_1 x ... x C_n) / G: Lefschetz part with
/// binomial multiplicities C(n,k) at twist k, plus one transcendental block
/// over all n factors.  Throws std::invalid_argument on modulus mismatch.
MotiveExpr kuenneth_quotient_motive(const std::vector<CurveAction>& curves,
                                    const RelationSubgroup& G);

/// Hodge numbers of a block (twist ignored): p -> h^{p, n-p},
/// h^{p,n-p} = sum_{t in Z_m} [x^p] prod_j (A_j(t) x + B_j(t)), where
/// A_j(t) / B_j(t) count occurrences of +-eps_j t among curve j's weights.
std::map<long, Int> block_hodge(const TranscendentalBlock& block);

MotiveExpr tensor(const MotiveExpr& M1, const MotiveExpr& M2);
MotiveExpr twist(const MotiveExpr& M, long k);
MotiveExpr direct_sum(const MotiveExpr& M1, const MotiveExpr& M2);

/// Scale every multiplicity by c (convenience; c >= 0).
MotiveExpr scale(const MotiveExpr& M, const Int& c);

/// Hodge realization; uses M.ambient_dim.  Throws std::logic_error if the
/// result violates h^{p,q} = h^{q,p} (internal inconsistency).
HodgeDiamond diamond(const MotiveExpr& M);

/// Rewrites every block over 2r genus-1 factors into rank * L^{r+twist},
/// where rank is the block's total Hodge rank; preserves the total Betti
/// number.  Throws std::invalid_argument("odd-dimensional supersingular
/// collapse unsupported") on a block with an odd factor count, or if a
/// factor has genus != 1.
LefschetzSum supersingular_collapse(const MotiveExpr& M);

/// Result of the matrix-level projector verification.
struct RealizationReport {
    bool ok = true;
    std::vector<std::string> failures;  ///< names of failed identities
};

/// Verifies, on the (2g+2)-dimensional character-basis realization of
/// H^0 + H^1 + H^2 of the curve: idempotence and orthogonality of the
/// degree projectors; sum_h rho(h) . pi^1 = 0; rho(h) . pi^j = pi^j for
/// j in {0,2}; and the degree vanishing pi^k . cup . (pi^i x pi^j) = 0
/// for k != i+j.  Requires quotient_rational.
RealizationReport realization_identities(const CurveAction& curve);

Int binomial(long n, long k);

}  // namespace motcalc

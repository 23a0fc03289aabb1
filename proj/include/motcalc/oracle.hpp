/**
 * @file oracle.hpp
 * @brief Independent ground-truth generators.
 *
 * Both oracles avoid the closed-form invariance test used by the main code
 * path: invariance of a character is decided by explicit evaluation over the
 * enumerated group elements, so agreement between oracle and calculator is
 * evidence, not tautology.
 */

#pragma once

#include "motcalc/characters.hpp"
#include "motcalc/curves.hpp"
#include "motcalc/motives.hpp"

namespace motcalc {

struct OracleCaps {
    Int group_cap = 1000000;       ///< max |G|
    Int assignment_cap = 100000;   ///< max number of enumerated line assignments
};

/// Brute-force Hodge numbers of a transcendental block: enumerates every
/// assignment of one H^1 line per factor, keeps those whose character is
/// trivial on every enumerated group element, and tallies by the number of
/// (1,0) choices.  Throws std::length_error when a cap is exceeded.
std::map<long, Int> bruteforce_block_hodge(const TranscendentalBlock& block,
                                           const OracleCaps& caps = {});

/// Chen-Ruan orbifold Hodge diamond of (C_1 x ... x C_n) / G: the sum over
/// group elements of the age-shifted G-invariant Hodge numbers of the fixed
/// set.  Throws std::domain_error("non-Gorenstein sector ...") naming the
/// element whose age is not an integer, and std::length_error on caps.
HodgeDiamond chen_ruan_diamond(const std::vector<CurveAction>& curves,
                               const RelationSubgroup& G,
                               const OracleCaps& caps = {});

}  // namespace motcalc

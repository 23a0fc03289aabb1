/**
 * @file characters.hpp
 * @brief Relation subgroups of (Z_m)^n and their character theory.
 *
 * The groups handled here are the kernels of a single signed sum,
 *   G = { (h_1,...,h_n) : sum_j eps_j h_j = 0 mod m },  eps_j in {+1,-1},
 * together with the characters of (Z_m)^n that restrict trivially to G
 * (the annihilator of G).  All data are exponent vectors of machine
 * integers reduced mod m.
 */

#pragma once

#include <cstdint>
#include <vector>

#include "motcalc/cyclotomic.hpp"

namespace motcalc {

/// Exponent vector of a character of (Z_m)^n: h -> zeta^{sum chi_j h_j}.
using CharacterVector = std::vector<long>;

/// G = { h in (Z_m)^n : sum_j signs[j] * h_j = 0 mod m }.
struct RelationSubgroup {
    long modulus = 0;            ///< m >= 2
    std::vector<int> signs;      ///< entries +1 / -1, length n >= 1

    size_t rank() const { return signs.size(); }
    /// |G| = m^{n-1}, exact.
    Int order() const;
};

/// Validates and builds a relation subgroup.  Throws std::invalid_argument
/// for m < 2, an empty sign list, or a sign not in {+1,-1}.
RelationSubgroup make_relation_subgroup(long m, const std::vector<int>& signs);

/// All m^{n-1} elements in lexicographic order (the first n-1 coordinates
/// range freely; the last is determined by the relation).  Throws
/// std::length_error naming required and allowed sizes if m^{n-1} exceeds
/// the cap.
std::vector<std::vector<long>> enumerate_elements(const RelationSubgroup& G,
                                                  const Int& cap = 1000000);

/// The m characters vanishing on G: { (eps_1 t, ..., eps_n t) : t in Z_m }.
std::vector<CharacterVector> annihilator(const RelationSubgroup& G);

/// True iff chi restricts trivially to G (closed form: chi is a multiple of
/// the sign vector).  Throws std::invalid_argument on a length mismatch.
bool is_invariant_character(const RelationSubgroup& G, const CharacterVector& chi);

/// The character sum sum_{g in G} zeta^{<chi, g>}, evaluated by explicit
/// summation over enumerate_elements (test/oracle path; exact).
CycInt character_sum(const RelationSubgroup& G, const CharacterVector& chi,
                     const Int& cap = 1000000);

}  // namespace motcalc

/**
 * @file pipeline.hpp
 * @brief Equivariant construction state machine.
 *
 * Builds the quotient varieties step by step: each step forms a product with
 * a new curve, blows up along the fixed locus of the acting group, passes to
 * the quotient, and (where the local geometry demands it) contracts redundant
 * exceptional classes.  The state tracks the motive, the fixed-locus
 * component tables of the residual automorphism, and an audit certificate of
 * the hypothesis checks performed at every step.
 *
 * Three step families are provided:
 *  - ch_z2_step: order-2 actions, fixed loci are smooth divisors;
 *  - ch_z3_step: order-3 actions, fixed loci a divisor plus a codimension-2
 *    part, with the extra blow-down that removes the redundant exceptional
 *    class over each transverse A2 stratum;
 *  - schreieder_step: order-3^c actions processed in c levels; level
 *    geometry beyond the transverse A2 pattern is computed by an exact
 *    local toric model of the blow-up/quotient tower, and any fixed-locus
 *    configuration outside the supported shapes aborts with its genealogy
 *    tag rather than guessing.
 */

#pragma once

#include <map>
#include <string>
#include <vector>

#include "motcalc/motives.hpp"

namespace motcalc {

/// An isolated point of a fixed-locus component at which the finer
/// (order-9) residual automorphism acts with known exact weights; used only
/// by two-level towers.
struct FinePoint {
    Int count = 1;
    std::vector<long> tangent_weights;     ///< mod 9, along the component
    std::vector<long> transverse_weights;  ///< mod 9, normal to the component
    /// Finer-fixed loci of positive dimension (curve fibers over fine points
    /// of a lower stage) carry their own dimension and Tate-type motive;
    /// isolated points use the defaults.
    long dim = 0;
    LefschetzSum motive = {{0, 1}};
};

/// One component (or family of isomorphic components) of the fixed locus of
/// a power of the residual automorphism.
struct FixedComponent {
    long dim = 0;
    LefschetzSum motive;                 ///< trivial-Chow motive of the component
    std::vector<long> normal_weights;    ///< size = codimension, mod the level modulus
    Int count = 1;
    std::string genealogy_tag;

    /// Two-level data: either the whole component is fixed by the finer
    /// generator (pointwise_fine, with refined weights mod 9), or only the
    /// listed isolated points are.
    bool pointwise_fine = false;
    std::vector<long> fine_normal_weights;  ///< mod 9, when pointwise_fine
    std::vector<FinePoint> fine_points;
};

/// One audited step of a pipeline run.
struct CertificateEntry {
    std::string kind;  ///< product | blow_up | quotient | blow_down | marking
    bool center_trivial_chow = false;
    bool center_group_stable = false;
    bool fixed_locus_shape_ok = false;
    std::string citation;
};

/// Pipeline state: a smooth projective variety with a residual cyclic action.
struct EquivariantVariety {
    long dim = 0;
    MotiveExpr motive;
    long group_order = 0;  ///< order of the residual cyclic group (2, 3 or 9)
    /// Key k -> components of the fixed locus of the k-th power of the
    /// generator.  Single-level towers use key 1 only; order-9 actions also
    /// carry key 3 (the fixed locus of the cube, weights mod 3).
    std::map<long, std::vector<FixedComponent>> fixed_table;
    std::vector<CertificateEntry> certificate;
};

/// CLI-facing build request.
struct ConstructionSpec {
    std::string construction;  ///< "ch-z2" | "ch-z3" | "schreieder"
    long n = 0;
    std::vector<long> genera;  ///< ch-z2 only; defaults to all 1
    long c = 1, a = 0, b = 0;  ///< schreieder only; a + b = n, a > b
    std::string mode = "complex";  ///< "complex" | "supersingular" (ch builds)
};

/// Dimension-1 start state for a built-in curve.  Validates the curve via
/// lefschetz_check for every nonzero power.
EquivariantVariety atom(const CurveAction& curve, long levels = 1);

/// One induction step of the order-2 construction: V1 is the new curve
/// factor (or any state whose fixed locus is a smooth divisor), V2 the
/// accumulated variety.  Throws std::invalid_argument naming the offending
/// component when a precondition fails.
EquivariantVariety ch_z2_step(const EquivariantVariety& V1, const EquivariantVariety& V2);

/// One induction step of the order-3 construction.  V1's fixed locus must be
/// a smooth divisor; V2's may have a codimension-2 part.
EquivariantVariety ch_z3_step(const EquivariantVariety& V1, const EquivariantVariety& V2);

/// One induction step of the c-level construction.  sign = +1 quotients by
/// phi_1 x phi_2^{-1} (the accumulating direction), sign = -1 by
/// phi_1 x phi_2 (the final, opposite-orientation factors).  For c = 1 this
/// coincides with ch_z3_step when sign = +1.  Unsupported fixed-locus shapes
/// throw std::domain_error carrying the genealogy tag.
EquivariantVariety schreieder_step(const EquivariantVariety& V1, const EquivariantVariety& V2,
                                   long c, int sign);

/// Full build: left fold of the matching step over the curve list.
/// Throws std::invalid_argument on malformed requests (unknown construction,
/// a <= b, a + b != n, unsupported c).
EquivariantVariety build(const ConstructionSpec& spec);

/// Result of the closure-condition audit.
struct CertificateReport {
    bool valid = true;
    std::vector<std::string> lines;  ///< one human-readable line per entry
};

/// Audits the certificate: every entry must have all hypothesis checks true,
/// and every Lefschetz summand of the motive must sit in even degree.
/// Failed checks render the report INVALID; no exception is thrown.
CertificateReport star_certificate(const EquivariantVariety& V);

/// Topological Euler characteristic of the Hodge realization.
Int euler_characteristic(const EquivariantVariety& V);

}  // namespace motcalc

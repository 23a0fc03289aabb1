/**
 * @file toric_local.hpp
 * @brief Exact local model of the blow-up/quotient tower at a fixed stratum.
 *
 * Internal to the pipeline.  The transverse geometry at a fixed stratum is a
 * cyclic quotient singularity C^k / <q> with q acting diagonally; the tower
 * (repeatedly blow up the fixed locus of the current level's automorphism,
 * quotient by it, contract redundant exceptional classes) is executed
 * faithfully on the toric fan, with the lattice enlarged at each quotient.
 * Outputs are the exceptional Lefschetz classes added per level and the
 * fixed-locus components of the residual output automorphism on the final
 * model, with exact weights.
 */

#pragma once

#include <string>
#include <vector>

#include "motcalc/motives.hpp"

namespace motcalc::toric {

/// A connected locus inside a local fixed component at which the order-9
/// output automorphism itself acts with known weights: an isolated point
/// (dim 0) or a chain of rational curves (dim 1).
struct LocalFinePt {
    std::vector<long> tangent9;     ///< zeta_9-exponents along the component
    std::vector<long> transverse9;  ///< zeta_9-exponents normal to the component
    long dim = 0;
    LefschetzSum motive = {{0, 1}};
};

/// One connected fixed component of the output automorphism on the resolved
/// local model, relative to the ambient stratum.
struct LocalFixedComponent {
    long dim = 0;              ///< toric dimension (0 or 1 in practice)
    LefschetzSum motive;       ///< 1, or 1 + cL for a chain of c rational curves
    std::vector<long> weights3;  ///< transverse weights mod 3 of the output cube
    bool pointwise_fine = false;
    std::vector<long> fine_weights9;   ///< when pointwise_fine
    std::vector<LocalFinePt> fine_pts; ///< otherwise: isolated finer-fixed points
    bool section_over_base = false;    ///< extends along the ambient stratum
};

struct TowerResult {
    /// Exceptional classes added by each level (post-contraction).
    std::vector<LefschetzSum> level_delta;
    /// Fixed components of the output automorphism's cube on the final model
    /// (components lying inside the coordinate-axis divisors are omitted:
    /// they belong to global components handled by the caller).
    std::vector<LocalFixedComponent> out_components;
};

/// Runs the tower on C^k with k = q9.size() <= 4 (contraction of redundant
/// exceptional classes is performed for k <= 3; k = 4 models are kept as the
/// smooth uncontracted resolution, which has the same transcendental part).
///  - q9: zeta_9-exponents of the generator q.  levels = 1 quotients by q
///    once (q of order 3, exponents divisible by 3); levels = 2 runs the
///    two-level tower (quotient by q^3, then by the image of q).
///  - out9: zeta_9-exponents of the output residual automorphism; empty when
///    no output components are needed.
///  - base_axes: coordinate slots that run along the ambient stratum rather
///    than transverse to it; fixed components whose rays all vanish on these
///    slots extend along the stratum and are flagged section_over_base.
/// Throws std::domain_error carrying `tag` for configurations outside the
/// supported shapes (non-terminating towers, singular quotients, ambiguous
/// component geometry).
TowerResult run_tower(const std::vector<long>& q9, int levels,
                      const std::vector<long>& out9,
                      const std::vector<int>& base_axes, const std::string& tag);

}  // namespace motcalc::toric

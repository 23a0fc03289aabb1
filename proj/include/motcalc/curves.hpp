/**
 * @file curves.hpp
 * @brief Building-block curves with cyclic automorphisms.
 *
 * A CurveAction is pure data: genus, the character weights of the generator
 * on holomorphic 1-forms, and the fixed points of each nontrivial power with
 * their tangent weights.  No function-field arithmetic is performed; the
 * tables are validated against the holomorphic Lefschetz fixed-point
 * identity, which any corrupted weight data will fail.
 */

#pragma once

#include <string>
#include <vector>

#include "motcalc/cyclotomic.hpp"

namespace motcalc {

/// One fixed point of some power of the generator.
struct FixedPoint {
    std::string label;
    long tangent_weight = 0;  ///< exponent mod m of the generator on the tangent line
};

struct CurveAction {
    long genus = 0;
    long modulus = 0;                      ///< order m of the acting cyclic group
    std::vector<long> h10_weights;         ///< g exponents mod m on H^{1,0}
    /// fixed_point_table[k-1] lists the fixed points of the k-th power of the
    /// generator, k = 1 .. m-1.
    std::vector<std::vector<FixedPoint>> fixed_point_table;
    bool quotient_rational = false;        ///< C / <generator> is rational
    bool fixed_points_rationally_equivalent = false;
    std::string name;
};

enum class CurveKind { hyperelliptic_involution, mu_curve };

/// Result of querying fixed points: either the whole curve (k = 0) or a
/// finite point list.
struct FixedSet {
    bool whole_curve = false;
    std::vector<FixedPoint> points;
};

/// Built-in families.
///  - hyperelliptic_involution: genus g >= 1, m = 2, the 2g+2 ramification
///    points each with tangent weight 1.
///  - mu_curve: genus g >= 1, m = 2g+1 (odd), weights {1..g}; each power k
///    fixes two finite points of tangent weight k and one point at infinity
///    of tangent weight g*k mod m.
/// Throws std::invalid_argument for g = 0 or (mu_curve) even m.
CurveAction builtin_curve(CurveKind kind, long genus);

/// Fixed set of the k-th power of the generator, 0 <= k < m.
FixedSet fixed_points(const CurveAction& curve, long k);

/// Verifies |Fix(k)| = 2 - trace(k | H^1) exactly in Z[zeta_m].  Throws
/// std::domain_error("non-integral trace ...") if the exact trace is not a
/// rational integer.
bool lefschetz_check(const CurveAction& curve, long k);

/// trace(k | H^1) as an exact cyclotomic integer,
/// sum_w (zeta^{kw} + zeta^{-kw}).
CycInt h1_trace(const CurveAction& curve, long k);

/// One line of the H^1 realization.
struct H1Line {
    int p = 0, q = 0;   ///< Hodge type (1,0) or (0,1)
    long weight = 0;    ///< exponent mod m
};

/// 2g lines: the (1,0) lines with weights h10_weights, then the (0,1) lines
/// with negated weights.
std::vector<H1Line> h1_realization(const CurveAction& curve);

}  // namespace motcalc

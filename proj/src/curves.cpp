#include "motcalc/curves.hpp"

#include <sstream>
#include <stdexcept>

namespace motcalc {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

CurveAction builtin_curve(CurveKind kind, long genus) {
    if (genus < 1)
        throw std::invalid_argument("builtin_curve: genus must be >= 1 for a nontrivial action");

    CurveAction c;
    c.genus = genus;
    c.quotient_rational = true;
    c.fixed_points_rationally_equivalent = true;

    if (kind == CurveKind::hyperelliptic_involution) {
        c.modulus = 2;
        c.h10_weights.assign(static_cast<size_t>(genus), 1);
        std::vector<FixedPoint> pts;
        for (long i = 0; i < 2 * genus + 2; ++i)
            pts.push_back({"w" + std::to_string(i), 1});
        c.fixed_point_table.push_back(std::move(pts));
        c.name = "hyperelliptic_involution(g=" + std::to_string(genus) + ")";
        return c;
    }

    // mu_curve: y^2 = x^{2g+1} + D with the order-(2g+1) rotation of x.
    const long m = 2 * genus + 1;
    if (m % 2 == 0)  // cannot happen for integral genus, kept as a guard
        throw std::invalid_argument("builtin_curve: mu_curve requires odd modulus");
    c.modulus = m;
    for (long w = 1; w <= genus; ++w) c.h10_weights.push_back(w);
    for (long k = 1; k < m; ++k) {
        // Two finite fixed points (0, +-sqrt(D)) where x is a local
        // parameter, and the point at infinity where the local parameter
        // y/x^{g+1} transforms with exponent g*k (note g = -(g+1) mod m).
        std::vector<FixedPoint> pts;
        pts.push_back({"p+", mod(k, m)});
        pts.push_back({"p-", mod(k, m)});
        pts.push_back({"inf", mod(genus * k, m)});
        c.fixed_point_table.push_back(std::move(pts));
    }
    c.name = "mu_curve(g=" + std::to_string(genus) + ")";
    return c;
}

FixedSet fixed_points(const CurveAction& curve, long k) {
    if (k < 0 || k >= curve.modulus)
        throw std::invalid_argument("fixed_points: k out of range");
    FixedSet fs;
    if (k == 0) {
        fs.whole_curve = true;
        return fs;
    }
    fs.points = curve.fixed_point_table.at(static_cast<size_t>(k - 1));
    return fs;
}

CycInt h1_trace(const CurveAction& curve, long k) {
    CycInt tr(curve.modulus);
    for (long w : curve.h10_weights) {
        tr.add_zeta_pow(k * w);
        tr.add_zeta_pow(-k * w);
    }
    return tr;
}

bool lefschetz_check(const CurveAction& curve, long k) {
    if (k == 0 || k >= curve.modulus)
        throw std::invalid_argument("lefschetz_check: k must be nonzero mod m");
    Int trace;
    if (!h1_trace(curve, k).is_integer(&trace)) {
        std::ostringstream msg;
        msg << "non-integral trace for " << curve.name << " at k=" << k;
        throw std::domain_error(msg.str());
    }
    Int expected = 2 - trace;
    return expected == Int(fixed_points(curve, k).points.size());
}

std::vector<H1Line> h1_realization(const CurveAction& curve) {
    std::vector<H1Line> lines;
    lines.reserve(2 * static_cast<size_t>(curve.genus));
    for (long w : curve.h10_weights) lines.push_back({1, 0, mod(w, curve.modulus)});
    for (long w : curve.h10_weights) lines.push_back({0, 1, mod(-w, curve.modulus)});
    return lines;
}

}  // namespace motcalc

#include "motcalc/oracle.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace motcalc {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

// Explicit invariance: the character sum over G is |G| iff every single term
// is 1, i.e. <chi, g> = 0 mod m for each enumerated element (character
// orthogonality makes the sum |G| or 0, nothing in between).
bool invariant_by_summation(const std::vector<std::vector<long>>& elements, long m,
                            const std::vector<long>& chi) {
    for (const auto& g : elements) {
        long e = 0;
        for (size_t j = 0; j < g.size(); ++j) e = (e + chi[j] * g[j]) % m;
        if (mod(e, m) != 0) return false;
    }
    return true;
}

}  // namespace

std::map<long, Int> bruteforce_block_hodge(const TranscendentalBlock& block,
                                           const OracleCaps& caps) {
    const long m = block.modulus;
    const size_t n = block.factors.size();
    RelationSubgroup G = make_relation_subgroup(m, block.signs);

    Int assignments = 1;
    for (const CurveAction& c : block.factors) assignments *= 2 * c.genus;
    if (assignments > caps.assignment_cap) {
        std::ostringstream msg;
        msg << "bruteforce_block_hodge: " << assignments
            << " line assignments exceed the cap " << caps.assignment_cap;
        throw std::length_error(msg.str());
    }
    auto elements = enumerate_elements(G, caps.group_cap);

    std::vector<std::vector<H1Line>> lines;
    for (const CurveAction& c : block.factors) lines.push_back(h1_realization(c));

    std::map<long, Int> out;
    for (size_t p = 0; p <= n; ++p) out[static_cast<long>(p)] = 0;

    std::vector<size_t> pick(n, 0);
    while (true) {
        std::vector<long> chi(n);
        long p = 0;
        for (size_t j = 0; j < n; ++j) {
            const H1Line& ln = lines[j][pick[j]];
            chi[j] = mod(ln.weight, m);
            p += ln.p;
        }
        if (invariant_by_summation(elements, m, chi)) out[p] += 1;

        size_t j = n;
        while (j-- > 0) {
            if (++pick[j] < lines[j].size()) break;
            pick[j] = 0;
            if (j == 0) return out;
        }
    }
}

HodgeDiamond chen_ruan_diamond(const std::vector<CurveAction>& curves,
                               const RelationSubgroup& G, const OracleCaps& caps) {
    const long m = G.modulus;
    const size_t n = curves.size();
    if (n != G.rank())
        throw std::invalid_argument("chen_ruan_diamond: curve count != sign count");
    for (const CurveAction& c : curves)
        if (c.modulus != m)
            throw std::invalid_argument("chen_ruan_diamond: curve modulus mismatch");

    auto elements = enumerate_elements(G, caps.group_cap);

    HodgeDiamond D;
    D.dim = static_cast<long>(n);

    for (const auto& g : elements) {
        // Fixed set of g: whole curves where g_j = 0, finite point sets
        // elsewhere; age = sum of normalized tangent weights over the point
        // factors, which must come out integral.
        std::vector<size_t> curve_factors;
        Int point_count = 1;
        long age_numer = 0;
        for (size_t j = 0; j < n; ++j) {
            if (g[j] == 0) {
                curve_factors.push_back(j);
                continue;
            }
            FixedSet fs = fixed_points(curves[j], g[j]);
            point_count *= static_cast<long>(fs.points.size());
            if (fs.points.empty()) break;
            // All points of one curve factor share the tangent weight.
            for (const FixedPoint& pt : fs.points) {
                long w = mod(pt.tangent_weight, m);
                if (w == 0)
                    throw std::domain_error("chen_ruan_diamond: zero tangent weight");
                if (pt.tangent_weight != fs.points.front().tangent_weight)
                    throw std::domain_error(
                        "chen_ruan_diamond: mixed tangent weights in one factor");
            }
            age_numer += mod(fs.points.front().tangent_weight, m);
        }
        if (point_count == 0) continue;
        if (age_numer % m != 0) {
            std::ostringstream msg;
            msg << "non-Gorenstein sector at g=(";
            for (size_t j = 0; j < n; ++j) msg << (j ? "," : "") << g[j];
            msg << ")";
            throw std::domain_error(msg.str());
        }
        const long age = age_numer / m;

        // G-invariant Hodge numbers of the product of the pointwise-fixed
        // curve factors: enumerate one basis class (unit, an H^1 line, or the
        // point class) per curve factor and test invariance by explicit
        // summation over G.
        Int sector_assignments = 1;
        for (size_t j : curve_factors) sector_assignments *= 2 * curves[j].genus + 2;
        if (sector_assignments > caps.assignment_cap)
            throw std::length_error("chen_ruan_diamond: sector assignment cap exceeded");

        struct BasisClass {
            long p, q, weight;
        };
        std::vector<std::vector<BasisClass>> basis;
        for (size_t j : curve_factors) {
            std::vector<BasisClass> b{{0, 0, 0}};
            for (const H1Line& ln : h1_realization(curves[j]))
                b.push_back({ln.p, ln.q, ln.weight});
            b.push_back({1, 1, 0});
            basis.push_back(std::move(b));
        }

        std::vector<size_t> pick(curve_factors.size(), 0);
        while (true) {
            std::vector<long> chi(n, 0);
            long p = 0, q = 0;
            for (size_t i = 0; i < curve_factors.size(); ++i) {
                const BasisClass& b = basis[i][pick[i]];
                chi[curve_factors[i]] = mod(b.weight, m);
                p += b.p;
                q += b.q;
            }
            if (invariant_by_summation(elements, m, chi))
                D.add(p + age, q + age, point_count);

            if (curve_factors.empty()) break;
            size_t i = curve_factors.size();
            bool done = true;
            while (i-- > 0) {
                if (++pick[i] < basis[i].size()) {
                    done = false;
                    break;
                }
                pick[i] = 0;
            }
            if (done) break;
        }
    }

    const long nd = static_cast<long>(n);
    for (const auto& [pq, v] : D.h) {
        if (v != D.at(pq.second, pq.first))
            throw std::logic_error("chen_ruan_diamond: symmetry violation");
        if (v != D.at(nd - pq.first, nd - pq.second))
            throw std::logic_error("chen_ruan_diamond: Serre duality violation");
    }
    return D;
}

}  // namespace motcalc

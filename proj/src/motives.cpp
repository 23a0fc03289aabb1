#include "motcalc/motives.hpp"

#include <stdexcept>

namespace motcalc {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

Int HodgeDiamond::at(long p, long q) const {
    auto it = h.find({p, q});
    return it == h.end() ? Int(0) : it->second;
}

void HodgeDiamond::add(long p, long q, const Int& v) {
    if (v == 0) return;
    h[{p, q}] += v;
    if (h[{p, q}] == 0) h.erase({p, q});
}

bool HodgeDiamond::operator==(const HodgeDiamond& o) const {
    return dim == o.dim && h == o.h;
}

MotiveExpr kuenneth_quotient_motive(const std::vector<CurveAction>& curves,
                                    const RelationSubgroup& G) {
    if (curves.size() != G.rank())
        throw std::invalid_argument("kuenneth_quotient_motive: curve count != sign count");
    for (const CurveAction& c : curves)
        if (c.modulus != G.modulus)
            throw std::invalid_argument("kuenneth_quotient_motive: curve modulus mismatch");

    const long n = static_cast<long>(curves.size());
    MotiveExpr M;
    M.ambient_dim = n;
    // The {0,2}-words of the Kuenneth expansion are all invariant and
    // contribute binomially; mixed words average to zero; the all-1 word
    // contributes the single transcendental block.
    for (long k = 0; k <= n; ++k) M.lefschetz[k] = binomial(n, k);
    TranscendentalBlock b;
    b.factors = curves;
    b.signs = G.signs;
    b.modulus = G.modulus;
    M.blocks.push_back(std::move(b));
    return M;
}

std::map<long, Int> block_hodge(const TranscendentalBlock& block) {
    const long m = block.modulus;
    const size_t n = block.factors.size();
    if (n == 0 || block.signs.size() != n || m < 1)
        throw std::invalid_argument("block_hodge: malformed block");

    std::map<long, Int> out;
    for (size_t p = 0; p <= n; ++p) out[static_cast<long>(p)] = 0;
    for (long t = 0; t < m; ++t) {
        // prod_j (A_j(t) x + B_j(t)) with A_j / B_j the multiplicities of
        // +-eps_j t among the j-th curve's holomorphic weights.
        std::vector<Int> poly{1};
        for (size_t j = 0; j < n; ++j) {
            long wa = mod(block.signs[j] * t, m);
            long wb = mod(-block.signs[j] * t, m);
            Int A = 0, B = 0;
            for (long w : block.factors[j].h10_weights) {
                if (mod(w, m) == wa) ++A;
                if (mod(w, m) == wb) ++B;
            }
            std::vector<Int> next(poly.size() + 1);
            for (size_t d = 0; d < poly.size(); ++d) {
                next[d] += poly[d] * B;
                next[d + 1] += poly[d] * A;
            }
            poly = std::move(next);
        }
        for (size_t p = 0; p < poly.size(); ++p) out[static_cast<long>(p)] += poly[p];
    }
    return out;
}

MotiveExpr tensor(const MotiveExpr& M1, const MotiveExpr& M2) {
    MotiveExpr R;
    R.ambient_dim = M1.ambient_dim + M2.ambient_dim;
    for (const auto& [k1, c1] : M1.lefschetz)
        for (const auto& [k2, c2] : M2.lefschetz)
            R.lefschetz[k1 + k2] += c1 * c2;
    for (const auto& [k, c] : M1.lefschetz)
        for (const TranscendentalBlock& b : M2.blocks) {
            TranscendentalBlock nb = b;
            nb.twist += k;
            nb.multiplicity *= c;
            R.blocks.push_back(std::move(nb));
        }
    for (const auto& [k, c] : M2.lefschetz)
        for (const TranscendentalBlock& b : M1.blocks) {
            TranscendentalBlock nb = b;
            nb.twist += k;
            nb.multiplicity *= c;
            R.blocks.push_back(std::move(nb));
        }
    for (const TranscendentalBlock& b1 : M1.blocks)
        for (const TranscendentalBlock& b2 : M2.blocks) {
            if (b1.modulus != b2.modulus)
                throw std::invalid_argument("tensor: block modulus mismatch");
            TranscendentalBlock nb = b1;
            nb.factors.insert(nb.factors.end(), b2.factors.begin(), b2.factors.end());
            nb.signs.insert(nb.signs.end(), b2.signs.begin(), b2.signs.end());
            nb.twist += b2.twist;
            nb.multiplicity *= b2.multiplicity;
            R.blocks.push_back(std::move(nb));
        }
    return R;
}

MotiveExpr twist(const MotiveExpr& M, long k) {
    MotiveExpr R;
    R.ambient_dim = M.ambient_dim + k;
    for (const auto& [t, c] : M.lefschetz) R.lefschetz[t + k] = c;
    for (TranscendentalBlock b : M.blocks) {
        b.twist += k;
        R.blocks.push_back(std::move(b));
    }
    return R;
}

MotiveExpr direct_sum(const MotiveExpr& M1, const MotiveExpr& M2) {
    MotiveExpr R = M1;
    if (M2.ambient_dim > R.ambient_dim) R.ambient_dim = M2.ambient_dim;
    for (const auto& [k, c] : M2.lefschetz) R.lefschetz[k] += c;
    R.blocks.insert(R.blocks.end(), M2.blocks.begin(), M2.blocks.end());
    return R;
}

MotiveExpr scale(const MotiveExpr& M, const Int& c) {
    MotiveExpr R = M;
    for (auto& [k, v] : R.lefschetz) v *= c;
    for (auto& b : R.blocks) b.multiplicity *= c;
    return R;
}

HodgeDiamond diamond(const MotiveExpr& M) {
    HodgeDiamond D;
    D.dim = M.ambient_dim;
    for (const auto& [k, c] : M.lefschetz) D.add(k, k, c);
    for (const TranscendentalBlock& b : M.blocks) {
        const long n = static_cast<long>(b.factors.size());
        for (const auto& [p, v] : block_hodge(b))
            D.add(p + b.twist, n - p + b.twist, v * b.multiplicity);
    }
    for (const auto& [pq, v] : D.h) {
        if (v < 0) throw std::logic_error("diamond: negative Hodge number");
        if (v != D.at(pq.second, pq.first))
            throw std::logic_error("diamond: symmetry violation");
    }
    return D;
}

LefschetzSum supersingular_collapse(const MotiveExpr& M) {
    LefschetzSum out = M.lefschetz;
    for (const TranscendentalBlock& b : M.blocks) {
        if (b.factors.size() % 2 != 0)
            throw std::invalid_argument("odd-dimensional supersingular collapse unsupported");
        for (const CurveAction& c : b.factors)
            if (c.genus != 1)
                throw std::invalid_argument(
                    "supersingular_collapse: only genus-1 factors supported");
        const long r = static_cast<long>(b.factors.size()) / 2;
        Int rank = 0;
        for (const auto& [p, v] : block_hodge(b)) rank += v;
        out[r + b.twist] += rank * b.multiplicity;
    }
    return out;
}

namespace {

// Cup product on the character basis of H^0 + H^1 + H^2:
// index 0 = the unit, 1..g = (1,0)-forms, g+1..2g = (0,1)-forms,
// 2g+1 = the point class.  Returns coefficient and target index
// (coefficient 0 means the product vanishes).
struct CupResult {
    Int coeff = 0;
    size_t idx = 0;
};

CupResult cup(size_t x, size_t y, long g) {
    const size_t unit = 0, pt = static_cast<size_t>(2 * g + 1);
    if (x == unit) return {1, y};
    if (y == unit) return {1, x};
    if (x == pt || y == pt) return {0, 0};  // degree > 2
    bool x10 = x <= static_cast<size_t>(g);
    bool y10 = y <= static_cast<size_t>(g);
    if (x10 == y10) return {0, 0};  // omega ^ omega and conjugates vanish
    size_t a = x10 ? x : x - static_cast<size_t>(g);
    size_t b = y10 ? y : y - static_cast<size_t>(g);
    if (a != b) return {0, 0};
    return {x10 ? Int(1) : Int(-1), pt};
}

long basis_degree(size_t i, long g) {
    if (i == 0) return 0;
    if (i == static_cast<size_t>(2 * g + 1)) return 2;
    return 1;
}

}  // namespace

RealizationReport realization_identities(const CurveAction& curve) {
    RealizationReport rep;
    if (!curve.quotient_rational) {
        rep.ok = false;
        rep.failures.push_back("quotient_rational required");
        return rep;
    }
    const long g = curve.genus;
    const long m = curve.modulus;
    const size_t dim = static_cast<size_t>(2 * g + 2);

    // Character-basis weights: H^0 and H^2 have weight 0 (the quotient is
    // rational, so the action on the point class is trivial).
    std::vector<long> weight(dim, 0);
    std::vector<long> degree(dim, 0);
    for (long a = 1; a <= g; ++a) {
        weight[static_cast<size_t>(a)] = mod(curve.h10_weights[static_cast<size_t>(a - 1)], m);
        weight[static_cast<size_t>(g + a)] = mod(-curve.h10_weights[static_cast<size_t>(a - 1)], m);
    }
    for (size_t i = 0; i < dim; ++i) degree[i] = basis_degree(i, g);

    auto fail = [&rep](const std::string& what) {
        rep.ok = false;
        rep.failures.push_back(what);
    };

    // Projector idempotence and mutual orthogonality (diagonal matrices).
    for (int i = 0; i <= 2; ++i)
        for (int j = 0; j <= 2; ++j)
            for (size_t b = 0; b < dim; ++b) {
                Int pi_i = degree[b] == i ? 1 : 0;
                Int pi_j = degree[b] == j ? 1 : 0;
                Int want = (i == j) ? pi_i : Int(0);
                if (pi_i * pi_j != want) {
                    fail("projector orthogonality at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
                    break;
                }
            }

    // sum_h rho(h) . pi^1 = 0: the geometric series of each nontrivial
    // character must vanish exactly in Z[zeta_m].
    for (size_t b = 0; b < dim; ++b) {
        if (degree[b] != 1) continue;
        CycInt s(m);
        for (long k = 0; k < m; ++k) s.add_zeta_pow(k * weight[b]);
        if (!s.is_zero()) fail("averaging over pi^1 nonzero at basis index " + std::to_string(b));
    }

    // rho(h) . pi^j = pi^j for j in {0,2}.
    for (long k = 0; k < m; ++k)
        for (size_t b = 0; b < dim; ++b) {
            if (degree[b] != 0 && degree[b] != 2) continue;
            if (!(CycInt::zeta_pow(m, k * weight[b]) == CycInt::integer(m, 1)))
                fail("rho(" + std::to_string(k) + ") not identity on degree " +
                     std::to_string(degree[b]));
        }

    // Degree vanishing of the cup product: pi^k . cup . (pi^i x pi^j) = 0
    // whenever k != i+j.
    for (size_t x = 0; x < dim; ++x)
        for (size_t y = 0; y < dim; ++y) {
            CupResult r = cup(x, y, g);
            if (r.coeff == 0) continue;
            long i = degree[x], j = degree[y], k = degree[r.idx];
            if (k != i + j)
                fail("cup product violates degree at (" + std::to_string(x) + "," +
                     std::to_string(y) + ")");
        }

    return rep;
}

}  // namespace motcalc

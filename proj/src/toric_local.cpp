#include "toric_local.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace motcalc::toric {
namespace {

// All lattice vectors are scaled by 9: the true vector (1/9)(w_1..w_k) is
// stored as the integer vector (w_1..w_k), and the reference lattice Z^k is
// stored as 9Z^k.  Group elements of order dividing 9 are then plain integer
// vectors of zeta_9-exponents.

using Vec = std::vector<long>;
using Face = std::vector<int>;  // sorted ray indices
using IMat = std::vector<Vec>;  // rows

long lmod(long a, long m) { return ((a % m) + m) % m; }

[[noreturn]] void fail(const std::string& tag, const std::string& what) {
    throw std::domain_error(tag + ": " + what);
}

IMat minor_mat(const IMat& M, size_t di, size_t dj) {
    IMat R;
    for (size_t i = 0; i < M.size(); ++i) {
        if (i == di) continue;
        Vec row;
        for (size_t j = 0; j < M.size(); ++j)
            if (j != dj) row.push_back(M[i][j]);
        R.push_back(std::move(row));
    }
    return R;
}

long idet(const IMat& M) {
    const size_t n = M.size();
    if (n == 0) return 1;
    if (n == 1) return M[0][0];
    if (n == 2) return M[0][0] * M[1][1] - M[0][1] * M[1][0];
    long s = 0;
    for (size_t j = 0; j < n; ++j) {
        if (M[0][j] == 0) continue;
        long c = M[0][j] * idet(minor_mat(M, 0, j));
        s += (j % 2 ? -c : c);
    }
    return s;
}

/// Classical adjugate: M * adj(M) = det(M) * I.
IMat adjugate(const IMat& M) {
    const size_t n = M.size();
    IMat A(n, Vec(n, 0));
    if (n == 1) {
        A[0][0] = 1;
        return A;
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            long c = idet(minor_mat(M, j, i));
            A[i][j] = ((i + j) % 2) ? -c : c;
        }
    return A;
}

Vec vec_mat(const Vec& v, const IMat& M) {  // row vector times matrix
    const size_t n = M.size(), m = M.empty() ? 0 : M[0].size();
    Vec r(m, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) r[j] += v[i] * M[i][j];
    return r;
}

long dot(const Vec& a, const Vec& b) {
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

struct Lattice {
    int k = 0;
    IMat B;  ///< basis rows
    IMat A;  ///< adjugate, sign-normalized: v = (v*A / d) * B with d > 0
    long d = 1;
};

Lattice make_lattice(IMat gens, int k, const std::string& tag) {
    int r = 0;
    for (int col = 0; col < k; ++col) {
        while (true) {
            int piv = -1, cnt = 0;
            for (int i = r; i < static_cast<int>(gens.size()); ++i)
                if (gens[i][col] != 0) {
                    ++cnt;
                    if (piv < 0 || std::abs(gens[i][col]) < std::abs(gens[piv][col]))
                        piv = i;
                }
            if (cnt == 0) fail(tag, "degenerate lattice");
            if (cnt == 1) {
                std::swap(gens[r], gens[piv]);
                ++r;
                break;
            }
            for (int i = r; i < static_cast<int>(gens.size()); ++i) {
                if (i == piv || gens[i][col] == 0) continue;
                long q = gens[i][col] / gens[piv][col];
                for (int j = 0; j < k; ++j) gens[i][j] -= q * gens[piv][j];
            }
        }
    }
    Lattice L;
    L.k = k;
    L.B.assign(gens.begin(), gens.begin() + k);
    long dd = idet(L.B);
    if (dd == 0) fail(tag, "degenerate lattice basis");
    L.A = adjugate(L.B);
    if (dd < 0) {
        for (auto& row : L.A)
            for (auto& x : row) x = -x;
        dd = -dd;
    }
    L.d = dd;
    return L;
}

/// Rational coordinates of v in the basis, times d.
Vec coords_num(const Lattice& L, const Vec& v) { return vec_mat(v, L.A); }

bool member(const Lattice& L, const Vec& v) {
    for (long x : coords_num(L, v))
        if (x % L.d != 0) return false;
    return true;
}

/// Primitive lattice point on the ray through v.
Vec primitive(const Lattice& L, const Vec& v, const std::string& tag) {
    Vec y = coords_num(L, v);
    long g = 0;
    for (long x : y) g = std::gcd(g, std::abs(x));
    if (g == 0) fail(tag, "primitive of zero vector");
    for (auto& x : y) x /= g;
    return vec_mat(y, L.B);
}

/// Integer coordinates of a lattice element in the basis.
Vec lat_coords(const Lattice& L, const Vec& v, const std::string& tag) {
    Vec y = coords_num(L, v);
    for (auto& x : y) {
        if (x % L.d != 0) fail(tag, "vector not in lattice");
        x /= L.d;
    }
    return y;
}

/// Saturated integer kernel { m in Z^k : m . row = 0 for every row }.
/// Column reduction by unimodular operations; the trailing columns of the
/// transformation are an exact basis of the kernel lattice.
std::vector<Vec> saturated_kernel(const std::vector<Vec>& rows, int k) {
    IMat U(k, Vec(k, 0));
    for (int i = 0; i < k; ++i) U[i][i] = 1;
    IMat R = rows;
    const int t = static_cast<int>(R.size());
    int lead = 0;
    for (int row = 0; row < t && lead < k; ++row) {
        while (true) {
            int piv = -1, cnt = 0;
            for (int j = lead; j < k; ++j)
                if (R[row][j] != 0) {
                    ++cnt;
                    if (piv < 0 || std::abs(R[row][j]) < std::abs(R[row][piv]))
                        piv = j;
                }
            if (cnt == 0) break;
            if (cnt == 1) {
                for (int i = 0; i < t; ++i) std::swap(R[i][piv], R[i][lead]);
                for (int i = 0; i < k; ++i) std::swap(U[i][piv], U[i][lead]);
                ++lead;
                break;
            }
            for (int j = lead; j < k; ++j) {
                if (j == piv || R[row][j] == 0) continue;
                long q = R[row][j] / R[row][piv];
                for (int i = 0; i < t; ++i) R[i][j] -= q * R[i][piv];
                for (int i = 0; i < k; ++i) U[i][j] -= q * U[i][piv];
            }
        }
    }
    std::vector<Vec> ker;
    for (int j = lead; j < k; ++j) {
        Vec m(k);
        for (int i = 0; i < k; ++i) m[i] = U[i][j];
        ker.push_back(std::move(m));
    }
    return ker;
}

struct Fan {
    int k = 0;
    Lattice L;
    std::vector<Vec> rays;
    std::vector<int> tag;   ///< level whose first pass created the ray, else -1
    std::vector<int> axis;  ///< original coordinate axis slot, or -1
    std::vector<Face> cones;
    std::string tagstr;
};

std::set<Face> all_faces(const Fan& F) {
    std::set<Face> out;
    for (const Face& c : F.cones) {
        const int n = static_cast<int>(c.size());
        for (int mask = 0; mask < (1 << n); ++mask) {
            Face f;
            for (int i = 0; i < n; ++i)
                if (mask & (1 << i)) f.push_back(c[i]);
            out.insert(f);
        }
    }
    return out;
}

LefschetzSum fan_class(const Fan& F) {
    LefschetzSum total;
    for (const Face& f : all_faces(F)) {
        const long j = F.k - static_cast<long>(f.size());
        for (long i = 0; i <= j; ++i) {
            Int term = binomial(j, i);
            if ((j - i) % 2) term = -term;
            total[i] += term;
        }
    }
    for (auto it = total.begin(); it != total.end();)
        it = (it->second == 0) ? total.erase(it) : std::next(it);
    return total;
}

IMat face_ray_coords(const Fan& F, const Face& f) {
    IMat R;
    for (int idx : f) R.push_back(lat_coords(F.L, F.rays[idx], F.tagstr));
    return R;
}

/// Whether the orbit of the face (hence its closure) is pointwise fixed by v.
bool face_fixed(const Fan& F, const Face& f, const Vec& v) {
    if (static_cast<int>(f.size()) == F.k) return true;
    const Vec yv = coords_num(F.L, v);
    for (const Vec& m : saturated_kernel(face_ray_coords(F, f), F.k))
        if (dot(m, yv) % F.L.d != 0) return false;
    return true;
}

bool cone_smooth(const Fan& F, const Face& c) {
    const long dd = idet(face_ray_coords(F, c));
    return dd == 1 || dd == -1;
}

/// zeta_9-exponents of v on the coordinate lines of a smooth corner.
std::vector<long> corner_weights9(const Fan& F, const Face& corner, const Vec& v) {
    IMat X = face_ray_coords(F, corner);
    long dx = idet(X);
    IMat AX = adjugate(X);
    if (dx < 0) {
        for (auto& row : AX)
            for (auto& x : row) x = -x;
        dx = -dx;
    }
    if (dx != 1) fail(F.tagstr, "weights requested at a singular corner");
    const Vec num = vec_mat(coords_num(F.L, v), AX);
    std::vector<long> w(F.k);
    for (int i = 0; i < F.k; ++i) {
        const long t = 9 * num[i];
        if (t % F.L.d != 0) fail(F.tagstr, "element order exceeds 9 at corner");
        w[i] = lmod(t / F.L.d, 9);
    }
    return w;
}

bool face_subset(const Face& small, const Face& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void star_subdivide(Fan& F, const Face& f, int level_tag) {
    Vec sum(F.k, 0);
    for (int idx : f)
        for (int j = 0; j < F.k; ++j) sum[j] += F.rays[idx][j];
    const Vec r = primitive(F.L, sum, F.tagstr);
    for (const Vec& ray : F.rays)
        if (ray == r) fail(F.tagstr, "subdivision ray collides with existing ray");
    const int nidx = static_cast<int>(F.rays.size());
    F.rays.push_back(r);
    F.tag.push_back(level_tag);
    F.axis.push_back(-1);
    std::vector<Face> nc;
    for (const Face& c : F.cones) {
        if (!face_subset(f, c)) {
            nc.push_back(c);
            continue;
        }
        for (int drop : f) {
            Face c2;
            for (int idx : c)
                if (idx != drop) c2.push_back(idx);
            c2.push_back(nidx);
            std::sort(c2.begin(), c2.end());
            nc.push_back(std::move(c2));
        }
    }
    F.cones = std::move(nc);
}

std::vector<Face> minimal_fixed_faces(const Fan& F, const Vec& v) {
    std::vector<Face> fixed;
    for (const Face& f : all_faces(F))
        if (!f.empty() && face_fixed(F, f, v)) fixed.push_back(f);
    std::vector<Face> mins;
    for (const Face& f : fixed) {
        bool minimal = true;
        for (const Face& g : fixed)
            if (g != f && face_subset(g, f)) {
                minimal = false;
                break;
            }
        if (minimal) mins.push_back(f);
    }
    return mins;
}

/// Blow up fixed centers of codimension >= 2 until the fixed locus is
/// divisorial; rays created for centers present at level start are tagged.
void resolve_level(Fan& F, const Vec& v, int level) {
    std::set<Face> initial;
    for (const Face& f : minimal_fixed_faces(F, v))
        if (f.size() >= 2) initial.insert(f);
    for (int pass = 0;; ++pass) {
        if (pass > 64) fail(F.tagstr, "resolution does not terminate");
        std::vector<Face> centers;
        for (const Face& f : minimal_fixed_faces(F, v))
            if (f.size() >= 2) centers.push_back(f);
        if (centers.empty()) return;
        std::sort(centers.begin(), centers.end());
        const Face f = centers.front();
        star_subdivide(F, f, initial.count(f) ? level : -1);
    }
}

void do_quotient(Fan& F, const Vec& v) {
    IMat gens = F.L.B;
    gens.push_back(v);
    F.L = make_lattice(std::move(gens), F.k, F.tagstr);
    for (auto& ray : F.rays) ray = primitive(F.L, ray, F.tagstr);
    for (const Face& c : F.cones)
        if (!cone_smooth(F, c)) fail(F.tagstr, "singular quotient model");
}

/// Signs of the coefficients of v as an exact combination of the rays of f
/// (which must be linearly independent); nullopt if v is not in their span.
std::optional<std::vector<int>> combo_signs(const Fan& F, const Face& f, const Vec& v) {
    const IMat R = face_ray_coords(F, f);
    const Vec yv = coords_num(F.L, v);
    for (const Vec& m : saturated_kernel(R, F.k))
        if (dot(m, yv) != 0) return std::nullopt;
    const int s = static_cast<int>(f.size());
    // choose s coordinate positions with a nonzero s x s minor
    std::vector<int> cols;
    {
        std::vector<int> idx(F.k);
        for (int i = 0; i < F.k; ++i) idx[i] = i;
        // greedy: try all s-subsets (k <= 4, s <= 4: tiny)
        std::vector<int> pick;
        std::function<bool(int)> rec = [&](int start) -> bool {
            if (static_cast<int>(pick.size()) == s) {
                IMat M(s, Vec(s));
                for (int i = 0; i < s; ++i)
                    for (int j = 0; j < s; ++j) M[i][j] = R[i][pick[j]];
                if (idet(M) != 0) {
                    cols = pick;
                    return true;
                }
                return false;
            }
            for (int c = start; c < F.k; ++c) {
                pick.push_back(c);
                if (rec(c + 1)) return true;
                pick.pop_back();
            }
            return false;
        };
        if (!rec(0)) return std::nullopt;
    }
    IMat M(s, Vec(s));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) M[i][j] = R[i][cols[j]];
    const long dm = idet(M);
    std::vector<int> signs(s);
    for (int i = 0; i < s; ++i) {
        IMat Mi = M;
        for (int j = 0; j < s; ++j) Mi[i][j] = yv[cols[j]];
        const long ni = idet(Mi);
        // lambda_i = ni / (dm * d); d > 0
        const long prod = ni * (dm > 0 ? 1 : -1);
        signs[i] = (prod > 0) - (prod < 0);
    }
    return signs;
}

bool strictly_positive(const std::optional<std::vector<int>>& s) {
    if (!s) return false;
    for (int x : *s)
        if (x <= 0) return false;
    return true;
}

void remove_ray(Fan& F, int ridx, std::vector<Face> replacement) {
    std::vector<Face> nc;
    for (const Face& c : F.cones)
        if (std::find(c.begin(), c.end(), ridx) == c.end()) nc.push_back(c);
    for (Face c : replacement) {
        std::sort(c.begin(), c.end());
        nc.push_back(std::move(c));
    }
    for (auto& c : nc)
        for (auto& idx : c)
            if (idx > ridx) --idx;
    F.rays.erase(F.rays.begin() + ridx);
    F.tag.erase(F.tag.begin() + ridx);
    F.axis.erase(F.axis.begin() + ridx);
    F.cones = std::move(nc);
}

/// Remove a first-pass exceptional ray when the merged cones are smooth in
/// the current (post-quotient) lattice; otherwise keep it.  Handles the star
/// shapes the towers produce (k = 2 pairs; k = 3 corner stars and edge
/// stars); anything else is kept.
void try_contract(Fan& F, int ridx) {
    std::vector<Face> hole;
    for (const Face& c : F.cones)
        if (std::find(c.begin(), c.end(), ridx) != c.end()) hole.push_back(c);
    std::set<int> outer_set;
    for (const Face& c : hole)
        for (int idx : c)
            if (idx != ridx) outer_set.insert(idx);
    const std::vector<int> outer(outer_set.begin(), outer_set.end());
    const Vec r = F.rays[ridx];

    if (F.k == 2) {
        if (hole.size() != 2 || outer.size() != 2) return;
        Face cand = {outer[0], outer[1]};
        std::sort(cand.begin(), cand.end());
        if (!strictly_positive(combo_signs(F, cand, r))) return;
        if (!cone_smooth(F, cand)) return;
        remove_ray(F, ridx, {cand});
        return;
    }
    if (F.k != 3) return;

    if (hole.size() == 3 && outer.size() == 3) {
        Face cand(outer.begin(), outer.end());
        if (!strictly_positive(combo_signs(F, cand, r))) return;
        if (!cone_smooth(F, cand)) return;
        remove_ray(F, ridx, {cand});
        return;
    }
    if (hole.size() == 4 && outer.size() == 4) {
        // boundary 4-cycle of the star
        std::map<int, std::vector<int>> adj;
        for (const Face& c : hole) {
            std::vector<int> pq;
            for (int idx : c)
                if (idx != ridx) pq.push_back(idx);
            if (pq.size() != 2) return;
            adj[pq[0]].push_back(pq[1]);
            adj[pq[1]].push_back(pq[0]);
        }
        for (const auto& [v_, nb] : adj)
            if (nb.size() != 2) return;
        std::vector<int> cyc{outer[0]};
        int prev = -1;
        while (cyc.size() < 4) {
            const auto& nb = adj[cyc.back()];
            const int nxt = (nb[0] != prev) ? nb[0] : nb[1];
            prev = cyc.back();
            cyc.push_back(nxt);
        }
        const int diag_pairs[2][2] = {{cyc[0], cyc[2]}, {cyc[1], cyc[3]}};
        const int others[2][2] = {{cyc[1], cyc[3]}, {cyc[0], cyc[2]}};
        for (int t = 0; t < 2; ++t) {
            Face diag = {diag_pairs[t][0], diag_pairs[t][1]};
            std::sort(diag.begin(), diag.end());
            if (!strictly_positive(combo_signs(F, diag, r))) continue;
            Face t1 = {diag[0], diag[1], others[t][0]};
            Face t2 = {diag[0], diag[1], others[t][1]};
            std::sort(t1.begin(), t1.end());
            std::sort(t2.begin(), t2.end());
            if (!cone_smooth(F, t1) || !cone_smooth(F, t2)) continue;
            remove_ray(F, ridx, {t1, t2});
            return;
        }
    }
}

LefschetzSum lef_sub_checked(const LefschetzSum& a, const LefschetzSum& b,
                             const std::string& tag) {
    LefschetzSum r = a;
    for (const auto& [k, v] : b) r[k] -= v;
    for (auto it = r.begin(); it != r.end();) {
        if (it->second == 0) {
            it = r.erase(it);
            continue;
        }
        if (it->second < 0) fail(tag, "non-effective level contribution");
        ++it;
    }
    return r;
}

std::vector<LocalFixedComponent> extract_components(const Fan& F, const Vec& vout,
                                                    const std::vector<int>& base_axes) {
    Vec vout3(F.k);
    for (int i = 0; i < F.k; ++i) vout3[i] = 3 * vout[i];
    if (member(F.L, vout3))
        fail(F.tagstr, "output automorphism cube acts trivially on local model");

    std::vector<Face> fixed;
    for (const Face& f : all_faces(F))
        if (!f.empty() && face_fixed(F, f, vout3)) fixed.push_back(f);

    // connectivity: faces whose union is again a face intersect
    const int nf = static_cast<int>(fixed.size());
    std::vector<int> parent(nf);
    for (int i = 0; i < nf; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < nf; ++i)
        for (int j = i + 1; j < nf; ++j) {
            Face u;
            std::set_union(fixed[i].begin(), fixed[i].end(), fixed[j].begin(),
                           fixed[j].end(), std::back_inserter(u));
            bool isface = false;
            for (const Face& c : F.cones)
                if (face_subset(u, c)) {
                    isface = true;
                    break;
                }
            if (isface) parent[find(i)] = find(j);
        }
    std::map<int, std::vector<Face>> comps;
    for (int i = 0; i < nf; ++i) comps[find(i)].push_back(fixed[i]);

    std::vector<LocalFixedComponent> out;
    for (auto& [root, faces] : comps) {
        std::sort(faces.begin(), faces.end(),
                  [](const Face& a, const Face& b) {
                      return a.size() != b.size() ? a.size() < b.size() : a < b;
                  });
        const size_t min_size = faces.front().size();

        // components glued to a pointwise-fixed coordinate divisor belong to
        // the ambient global component; they must not carry extra fixed rays
        bool has_fixed_axis_ray = false;
        for (const Face& f : faces)
            if (f.size() == 1 && F.axis[f[0]] >= 0) has_fixed_axis_ray = true;
        if (has_fixed_axis_ray) {
            for (const Face& f : faces)
                if (f.size() == 1 && F.axis[f[0]] < 0)
                    fail(F.tagstr,
                         "exceptional fixed divisor glued to a coordinate divisor");
            continue;
        }

        // a component whose generic stratum is cut out by coordinate
        // divisors alone is the germ of a global product stratum; it is
        // tracked by the global fixed-locus table, not by the local model
        {
            bool all_axis = true;
            for (int idx : faces.front())
                if (F.axis[idx] < 0) all_axis = false;
            if (all_axis) continue;
        }

        LocalFixedComponent comp;
        comp.dim = F.k - static_cast<long>(min_size);
        for (const Face& f : faces) {
            const long j = F.k - static_cast<long>(f.size());
            for (long i = 0; i <= j; ++i) {
                Int term = binomial(j, i);
                if ((j - i) % 2) term = -term;
                comp.motive[i] += term;
            }
        }
        for (auto it = comp.motive.begin(); it != comp.motive.end();) {
            if (it->second == 0) {
                it = comp.motive.erase(it);
                continue;
            }
            if (it->second < 0) fail(F.tagstr, "non-effective component motive");
            ++it;
        }

        const Face tau0 = faces.front();
        Face corner;
        for (const Face& c : F.cones)
            if (face_subset(tau0, c)) {
                corner = c;
                break;
            }
        if (corner.empty()) fail(F.tagstr, "face without an ambient corner");
        // Transverse directions are the coordinates of the tau0-slots (they
        // cut out the divisors whose intersection is the component); the
        // remaining slots are tangent and carry weight 0 automatically.
        const auto w3c = corner_weights9(F, corner, vout3);
        for (size_t i = 0; i < corner.size(); ++i) {
            const bool in_tau = std::find(tau0.begin(), tau0.end(), corner[i]) != tau0.end();
            if (!in_tau) {
                if (w3c[i] != 0)
                    fail(F.tagstr, "nonzero tangent weight on fixed component");
                continue;
            }
            if (w3c[i] % 3 != 0) fail(F.tagstr, "transverse weight of cube not cubic");
            const long w = lmod(w3c[i] / 3, 3);
            if (w == 0) fail(F.tagstr, "zero transverse weight on fixed component");
            comp.weights3.push_back(w);
        }

        if (!base_axes.empty()) {
            // the component is a section over the base directions when its
            // generic stratum (the minimal face) does not involve them; the
            // caller accounts for such components over the full stratum, so
            // their finer structure is not analysed here
            bool all_zero = true;
            for (int idx : tau0)
                for (int slot : base_axes)
                    if (F.rays[idx][slot] != 0) all_zero = false;
            comp.section_over_base = all_zero;
            if (all_zero) {
                out.push_back(std::move(comp));
                continue;
            }
        }

        // finer (order-9) fixed structure
        bool all_fine = true;
        for (const Face& f : faces)
            if (!face_fixed(F, f, vout)) all_fine = false;
        if (all_fine) {
            comp.pointwise_fine = true;
            const auto w9 = corner_weights9(F, corner, vout);
            for (size_t i = 0; i < corner.size(); ++i) {
                const bool in_tau =
                    std::find(tau0.begin(), tau0.end(), corner[i]) != tau0.end();
                if (!in_tau) {
                    if (w9[i] != 0)
                        fail(F.tagstr, "nonzero fine tangent weight on fixed component");
                    continue;
                }
                comp.fine_weights9.push_back(w9[i]);
            }
        } else {
            // group the finer-fixed faces of the component into connected
            // finer-fixed loci: isolated corners or chains of rational curves
            std::vector<Face> fine;
            for (const Face& f : faces)
                if (face_fixed(F, f, vout)) fine.push_back(f);
            const int nfine = static_cast<int>(fine.size());
            std::vector<int> fpar(nfine);
            for (int i = 0; i < nfine; ++i) fpar[i] = i;
            std::function<int(int)> ffind = [&](int x) {
                while (fpar[x] != x) x = fpar[x] = fpar[fpar[x]];
                return x;
            };
            for (int i = 0; i < nfine; ++i)
                for (int j = i + 1; j < nfine; ++j) {
                    Face u;
                    std::set_union(fine[i].begin(), fine[i].end(), fine[j].begin(),
                                   fine[j].end(), std::back_inserter(u));
                    for (const Face& c : F.cones)
                        if (face_subset(u, c)) {
                            fpar[ffind(i)] = ffind(j);
                            break;
                        }
                }
            std::map<int, std::vector<Face>> fgroups;
            for (int i = 0; i < nfine; ++i) fgroups[ffind(i)].push_back(fine[i]);

            for (auto& [froot, group] : fgroups) {
                std::sort(group.begin(), group.end(),
                          [](const Face& a, const Face& b) {
                              return a.size() != b.size() ? a.size() < b.size() : a < b;
                          });
                const Face tf = group.front();
                LocalFinePt pt;
                pt.dim = F.k - static_cast<long>(tf.size());
                if (pt.dim >= comp.dim)
                    fail(F.tagstr, "finer fixed locus covers the component");
                if (pt.dim > 1)
                    fail(F.tagstr, "finer fixed locus of unsupported dimension");
                pt.motive.clear();
                for (const Face& f : group) {
                    const long j = F.k - static_cast<long>(f.size());
                    for (long i = 0; i <= j; ++i) {
                        Int term = binomial(j, i);
                        if ((j - i) % 2) term = -term;
                        pt.motive[i] += term;
                    }
                }
                for (auto it = pt.motive.begin(); it != pt.motive.end();) {
                    if (it->second == 0) {
                        it = pt.motive.erase(it);
                        continue;
                    }
                    if (it->second < 0)
                        fail(F.tagstr, "non-effective finer fixed locus motive");
                    ++it;
                }
                // smallest component face containing the finer locus
                Face tau;
                for (const Face& g : faces)
                    if (face_subset(g, tf)) {
                        tau = g;
                        break;
                    }
                // weights at every full corner of the locus must agree
                bool first = true;
                int corners = 0;
                for (const Face& f : group) {
                    if (static_cast<int>(f.size()) != F.k) continue;
                    ++corners;
                    const auto w9 = corner_weights9(F, f, vout);
                    std::vector<long> tg, tr;
                    for (size_t i = 0; i < f.size(); ++i) {
                        const bool in_tf =
                            std::find(tf.begin(), tf.end(), f[i]) != tf.end();
                        if (!in_tf) {
                            if (w9[i] != 0)
                                fail(F.tagstr,
                                     "nonzero weight along finer fixed locus");
                            continue;
                        }
                        const bool in_tau =
                            std::find(tau.begin(), tau.end(), f[i]) != tau.end();
                        if (in_tau)
                            tr.push_back(w9[i]);
                        else
                            tg.push_back(w9[i]);
                    }
                    std::sort(tg.begin(), tg.end());
                    std::sort(tr.begin(), tr.end());
                    if (first) {
                        pt.tangent9 = tg;
                        pt.transverse9 = tr;
                        first = false;
                    } else if (tg != pt.tangent9 || tr != pt.transverse9) {
                        fail(F.tagstr,
                             "inconsistent corner weights on finer fixed locus");
                    }
                }
                if (corners == 0)
                    fail(F.tagstr, "finer fixed locus without a full corner");
                comp.fine_pts.push_back(std::move(pt));
            }
        }
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace

TowerResult run_tower(const std::vector<long>& q9, int levels,
                      const std::vector<long>& out9,
                      const std::vector<int>& base_axes, const std::string& tag) {
    const int k = static_cast<int>(q9.size());
    if (k < 1 || k > 4)
        throw std::invalid_argument(tag + ": unsupported transverse rank");
    if (levels != 1 && levels != 2)
        throw std::invalid_argument(tag + ": unsupported level count");

    TowerResult R;
    R.level_delta.assign(levels, LefschetzSum{});
    if (k == 1) return R;  // branched cover along a divisor: nothing added

    Fan F;
    F.k = k;
    F.tagstr = tag;
    IMat gens(k, Vec(k, 0));
    for (int i = 0; i < k; ++i) gens[i][i] = 9;
    F.L = make_lattice(gens, k, tag);
    for (int i = 0; i < k; ++i) {
        Vec e(k, 0);
        e[i] = 9;
        F.rays.push_back(e);
        F.tag.push_back(-1);
        F.axis.push_back(i);
    }
    Face top(k);
    for (int i = 0; i < k; ++i) top[i] = i;
    F.cones = {top};

    LefschetzSum before = fan_class(F);
    for (int l = 0; l < levels; ++l) {
        Vec v(k);
        for (int i = 0; i < k; ++i)
            v[i] = (levels == 2 && l == 0) ? lmod(3 * q9[i], 9) : lmod(q9[i], 9);
        if (member(F.L, v)) continue;  // acts trivially at this level
        resolve_level(F, v, l);
        do_quotient(F, v);
        for (int idx = static_cast<int>(F.rays.size()) - 1; idx >= 0; --idx)
            if (F.tag[idx] == l) try_contract(F, idx);
        LefschetzSum after = fan_class(F);
        R.level_delta[l] = lef_sub_checked(after, before, tag);
        before = std::move(after);
    }

    if (!out9.empty()) {
        if (static_cast<int>(out9.size()) != k)
            throw std::invalid_argument(tag + ": output weight rank mismatch");
        Vec vo(k);
        for (int i = 0; i < k; ++i) vo[i] = lmod(out9[i], 9);
        R.out_components = extract_components(F, vo, base_axes);
    }
    return R;
}

}  // namespace motcalc::toric

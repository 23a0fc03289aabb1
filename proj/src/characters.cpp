#include "motcalc/characters.hpp"

#include <sstream>
#include <stdexcept>

namespace motcalc {

Int RelationSubgroup::order() const {
    Int o = 1;
    for (size_t i = 1; i < signs.size(); ++i) o *= modulus;
    return o;
}

RelationSubgroup make_relation_subgroup(long m, const std::vector<int>& signs) {
    if (m < 2) throw std::invalid_argument("make_relation_subgroup: modulus must be >= 2");
    if (signs.empty()) throw std::invalid_argument("make_relation_subgroup: sign list must be nonempty");
    for (int s : signs)
        if (s != 1 && s != -1)
            throw std::invalid_argument("make_relation_subgroup: signs must be +1 or -1");
    return RelationSubgroup{m, signs};
}

std::vector<std::vector<long>> enumerate_elements(const RelationSubgroup& G, const Int& cap) {
    const long m = G.modulus;
    const size_t n = G.rank();
    Int required = G.order();
    if (required > cap) {
        std::ostringstream msg;
        msg << "enumerate_elements: group order " << required
            << " exceeds the allowed cap " << cap;
        throw std::length_error(msg.str());
    }

    std::vector<std::vector<long>> out;
    out.reserve(static_cast<size_t>(required));
    std::vector<long> h(n, 0);
    // The first n-1 coordinates run freely in lexicographic order; the last
    // is forced by the relation sum_j eps_j h_j = 0 mod m.
    while (true) {
        long s = 0;
        for (size_t j = 0; j + 1 < n; ++j) s = (s + G.signs[j] * h[j]) % m;
        // eps_n h_n = -s, and eps_n is a unit (+-1).
        long last = ((-G.signs[n - 1] * s) % m + m) % m;
        h[n - 1] = last;
        out.push_back(h);

        size_t j = n - 1;
        while (j-- > 0) {
            if (++h[j] < m) break;
            h[j] = 0;
            if (j == 0) return out;
        }
        if (n == 1) return out;
    }
}

std::vector<CharacterVector> annihilator(const RelationSubgroup& G) {
    const long m = G.modulus;
    std::vector<CharacterVector> out;
    out.reserve(static_cast<size_t>(m));
    for (long t = 0; t < m; ++t) {
        CharacterVector chi(G.rank());
        for (size_t j = 0; j < G.rank(); ++j)
            chi[j] = ((G.signs[j] * t) % m + m) % m;
        out.push_back(std::move(chi));
    }
    return out;
}

bool is_invariant_character(const RelationSubgroup& G, const CharacterVector& chi) {
    if (chi.size() != G.rank())
        throw std::invalid_argument("is_invariant_character: character length mismatch");
    const long m = G.modulus;
    // chi is trivial on G iff chi = t * (eps_1, ..., eps_n) mod m for some t;
    // t is then determined by the first coordinate.
    long t = ((G.signs[0] * chi[0]) % m + m) % m;
    for (size_t j = 0; j < G.rank(); ++j) {
        long expect = ((G.signs[j] * t) % m + m) % m;
        long got = ((chi[j] % m) + m) % m;
        if (got != expect) return false;
    }
    return true;
}

CycInt character_sum(const RelationSubgroup& G, const CharacterVector& chi, const Int& cap) {
    if (chi.size() != G.rank())
        throw std::invalid_argument("character_sum: character length mismatch");
    CycInt acc(G.modulus);
    for (const auto& g : enumerate_elements(G, cap)) {
        long e = 0;
        for (size_t j = 0; j < g.size(); ++j) e += chi[j] * g[j];
        acc.add_zeta_pow(e);
    }
    return acc;
}

}  // namespace motcalc

#include "motcalc/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace motcalc {

namespace {

// Exact division of polynomials with integer coefficients; the divisor must
// be monic and must divide evenly.  Index = degree.
std::vector<Int> exact_div(std::vector<Int> num, const std::vector<Int>& den) {
    if (den.empty() || den.back() != 1)
        throw std::logic_error("exact_div: divisor must be monic");
    const size_t dd = den.size() - 1;
    if (num.size() - 1 < dd) throw std::logic_error("exact_div: degree underflow");
    std::vector<Int> quot(num.size() - den.size() + 1);
    for (size_t i = quot.size(); i-- > 0;) {
        Int c = num[i + dd];
        quot[i] = c;
        if (c != 0)
            for (size_t j = 0; j <= dd; ++j) num[i + j] -= c * den[j];
    }
    for (const Int& c : num)
        if (c != 0) throw std::logic_error("exact_div: nonzero remainder");
    return quot;
}

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long m) {
    static std::map<long, std::vector<Int>> cache;
    static std::recursive_mutex mu;  // the computation recurses on divisors
    std::lock_guard<std::recursive_mutex> lock(mu);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m < 1) throw std::invalid_argument("cyclotomic_polynomial: m must be >= 1");

    // x^m - 1 = prod_{d | m} Phi_d(x); divide out the proper divisors.
    std::vector<Int> num(static_cast<size_t>(m) + 1);
    num[0] = -1;
    num[static_cast<size_t>(m)] = 1;
    for (long d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = exact_div(std::move(num), cyclotomic_polynomial(d));
    }
    auto res = cache.emplace(m, std::move(num));
    return res.first->second;
}

CycInt::CycInt(long m) : m_(m), coeff_(static_cast<size_t>(m)) {
    if (m < 1) throw std::invalid_argument("CycInt: modulus must be >= 1");
}

CycInt CycInt::zeta_pow(long m, long k) {
    CycInt z(m);
    z.add_zeta_pow(k, 1);
    return z;
}

CycInt CycInt::integer(long m, const Int& n) {
    CycInt z(m);
    z.coeff_[0] = n;
    return z;
}

void CycInt::add_zeta_pow(long k, const Int& c) {
    k %= m_;
    if (k < 0) k += m_;
    coeff_[static_cast<size_t>(k)] += c;
}

CycInt& CycInt::operator+=(const CycInt& other) {
    if (other.m_ != m_) throw std::invalid_argument("CycInt: modulus mismatch");
    for (long k = 0; k < m_; ++k) coeff_[k] += other.coeff_[k];
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& other) {
    if (other.m_ != m_) throw std::invalid_argument("CycInt: modulus mismatch");
    for (long k = 0; k < m_; ++k) coeff_[k] -= other.coeff_[k];
    return *this;
}

CycInt CycInt::operator+(const CycInt& other) const {
    CycInt r = *this;
    r += other;
    return r;
}

CycInt CycInt::operator-(const CycInt& other) const {
    CycInt r = *this;
    r -= other;
    return r;
}

CycInt CycInt::operator-() const {
    CycInt r(m_);
    for (long k = 0; k < m_; ++k) r.coeff_[k] = -coeff_[k];
    return r;
}

CycInt CycInt::operator*(const CycInt& other) const {
    if (other.m_ != m_) throw std::invalid_argument("CycInt: modulus mismatch");
    CycInt r(m_);
    for (long i = 0; i < m_; ++i) {
        if (coeff_[i] == 0) continue;
        for (long j = 0; j < m_; ++j) {
            if (other.coeff_[j] == 0) continue;
            long k = (i + j) % m_;
            r.coeff_[k] += coeff_[i] * other.coeff_[j];
        }
    }
    return r;
}

std::vector<Int> CycInt::reduced() const {
    const std::vector<Int>& phi = cyclotomic_polynomial(m_);
    const size_t deg = phi.size() - 1;
    std::vector<Int> rem = coeff_;
    if (rem.size() < deg) rem.resize(deg);
    // Synthetic reduction modulo the monic polynomial phi.
    for (size_t i = rem.size(); i-- > deg;) {
        Int c = rem[i];
        if (c == 0) continue;
        rem[i] = 0;
        for (size_t j = 0; j < deg; ++j) rem[i - deg + j] -= c * phi[j];
    }
    rem.resize(deg);
    return rem;
}

bool CycInt::is_zero() const {
    for (const Int& c : reduced())
        if (c != 0) return false;
    return true;
}

bool CycInt::is_integer(Int* value) const {
    std::vector<Int> rem = reduced();
    for (size_t i = 1; i < rem.size(); ++i)
        if (rem[i] != 0) return false;
    if (value) *value = rem.empty() ? Int(0) : rem[0];
    return true;
}

bool CycInt::operator==(const CycInt& other) const {
    return (*this - other).is_zero();
}

}  // namespace motcalc

/**
 * @file cyclotomic.hpp
 * @brief Exact arithmetic in the ring of cyclotomic integers Z[zeta_m].
 *
 * Elements are stored as integer coefficient vectors on the spanning set
 * 1, zeta, ..., zeta^{m-1} (zeta a primitive m-th root of unity) and are
 * only reduced modulo the m-th cyclotomic polynomial when a question is
 * asked (zero test, integrality test).  This keeps the common operations
 * (accumulating character sums) allocation-cheap and exact; no floating
 * point is used anywhere.
 */

#pragma once

#include <vector>
#include <boost/multiprecision/cpp_int.hpp>

namespace motcalc {

using Int = boost::multiprecision::cpp_int;

/// Coefficients of the m-th cyclotomic polynomial, index = degree.
/// Computed by exact division of x^m - 1 by the lower-order cyclotomic
/// polynomials; results are cached per m.  m >= 1.
const std::vector<Int>& cyclotomic_polynomial(long m);

/**
 * @brief An element of Z[zeta_m], m fixed at construction.
 */
class CycInt {
public:
    explicit CycInt(long m);

    /// zeta^k as an element (k arbitrary; reduced mod m).
    static CycInt zeta_pow(long m, long k);

    /// The integer n as an element.
    static CycInt integer(long m, const Int& n);

    long modulus() const { return m_; }

    /// Add c * zeta^k in place (k arbitrary; reduced mod m).
    void add_zeta_pow(long k, const Int& c = 1);

    CycInt& operator+=(const CycInt& other);
    CycInt& operator-=(const CycInt& other);
    CycInt operator+(const CycInt& other) const;
    CycInt operator-(const CycInt& other) const;
    CycInt operator*(const CycInt& other) const;
    CycInt operator-() const;

    bool operator==(const CycInt& other) const;

    /// True iff the element is 0 in Z[zeta_m].
    bool is_zero() const;

    /// True iff the element lies in Z; if so *value receives it.
    bool is_integer(Int* value = nullptr) const;

    /// Reduced representative modulo the m-th cyclotomic polynomial
    /// (degree < phi(m)).
    std::vector<Int> reduced() const;

private:
    long m_;
    std::vector<Int> coeff_;  // index k: coefficient of zeta^k, size m
};

}  // namespace motcalc

#pragma once

#include <string>
#include <vector>

#include "ffhyper/ff.hpp"
#include "ffhyper/modarith.hpp"
#include "ffhyper/rational.hpp"

namespace ffhyper {

// p^valuation * unit, with unit known mod p^precision. Zero is unit == 0 and
// precision == 0, and then valuation is the absolute precision of the zero.
struct QpNum {
    int valuation = 0;
    u64 unit = 0;
    int precision = 0;

    bool is_zero() const { return unit == 0; }
    int absolute_precision() const { return valuation + precision; }
};

// Element of Q_q = Q_p[u]/(f(u)), f the integer lift of the field modulus.
// unit holds r coefficients mod p^precision and reduces mod p to a nonzero element
// of F_q. Zero follows the same convention as QpNum.
struct QqNum {
    int valuation = 0;
    std::vector<u64> unit;
    int precision = 0;

    bool is_zero() const { return precision == 0; }
    int absolute_precision() const { return valuation + precision; }
};

QpNum embed_rational(const Rational& x, u64 p, int n);

// Arithmetic context for Q_q over a given field. The field must outlive it.
class Qq {
public:
    explicit Qq(const FieldDesc& field);

    const FieldDesc& field() const { return *field_; }
    u64 p() const { return p_; }
    std::uint32_t r() const { return r_; }
    int max_precision() const { return max_precision_; }
    u64 modulus_for(int n) const;  // p^n

    QqNum zero(int absolute_precision) const;
    QqNum from_int(i64 n, int precision) const;
    QqNum from_rational(const Rational& x, int precision) const;
    QqNum from_qp(const QpNum& x) const;
    // Builds p^valuation * vec with vec known mod p^precision, normalizing the valuation.
    QqNum make(int valuation, std::vector<u64> vec, int precision) const;

    QqNum add(const QqNum& x, const QqNum& y) const;
    QqNum sub(const QqNum& x, const QqNum& y) const;
    QqNum neg(const QqNum& x) const;
    QqNum mul(const QqNum& x, const QqNum& y) const;
    QqNum inv(const QqNum& x) const;
    QqNum pow(const QqNum& x, u64 e) const;

    // x reduced to absolute precision a (never increases precision).
    QqNum truncate(const QqNum& x, int a) const;
    bool equal_mod(const QqNum& x, const QqNum& y, int a) const;
    // Reduction mod p of a value with valuation 0.
    FqElem reduce(const QqNum& x) const;

    // "p^v * [c0, c1, ...] (mod p^N)" or "0 (mod p^A)"
    std::string str(const QqNum& x) const;

    // Ring operations on raw coefficient vectors mod m.
    std::vector<u64> vec_mul(const std::vector<u64>& a, const std::vector<u64>& b, u64 m) const;
    std::vector<u64> vec_inv(const std::vector<u64>& a, int n) const;  // unit vector mod p^n
    std::vector<u64> vec_pow(std::vector<u64> a, u64 e, u64 m) const;

private:
    const FieldDesc* field_;
    u64 p_;
    std::uint32_t r_;
    int max_precision_;
    std::vector<u64> lifted_;  // c_0..c_{r-1} of the monic lifted modulus
};

std::string qp_str(const QpNum& x, u64 p);

// Teichmuller lift of x mod p^n; zero maps to the zero value.
QqNum teichmuller(const Qq& ring, FqElem x, int n);

// omega(g)^e for e in [0, q-1), stored flat, r coefficients per entry.
class TeichmullerTable {
public:
    TeichmullerTable(const Qq& ring, int n);

    const FieldDesc& field() const { return *field_; }
    std::uint32_t r() const { return r_; }
    int precision() const { return n_; }
    u64 modulus() const { return modulus_; }
    const u64* power(u64 e) const { return data_.data() + (e % order_) * r_; }
    std::vector<u64> lift(FqElem x) const;  // zero vector for x = 0
    // omega-bar^j(x) = omega(x)^{-j}; zero vector for x = 0.
    std::vector<u64> conj_power(FqElem x, i64 j) const;

private:
    const FieldDesc* field_;
    int n_;
    u64 modulus_;
    u64 order_;
    std::uint32_t r_;
    std::vector<u64> data_;
};

// Element of Z_q[pi]/(pi^{p-1} + p): coeffs[k] is the Z_q coefficient of pi^k.
struct PiAdic {
    std::vector<std::vector<u64>> coeffs;
    int pi_precision = 0;
};

class PiAdicRing {
public:
    // Values are tracked modulo pi^m; coefficients are stored mod p^{ceil(m/(p-1)) + 1}.
    PiAdicRing(const Qq& ring, int m);

    const Qq& base() const { return *ring_; }
    int pi_precision() const { return m_; }
    u64 coeff_modulus() const { return modulus_; }
    int coeff_digits() const { return np_; }
    // pi-adic valuation capped at the exact range held by the coefficients.
    int valuation_cap() const { return cap_; }

    PiAdic zero() const;
    PiAdic one() const;
    PiAdic from_int(i64 n) const;
    PiAdic from_zq(const std::vector<u64>& c) const;  // c mod coeff_modulus
    PiAdic pi_power(int k) const;

    PiAdic add(const PiAdic& x, const PiAdic& y) const;
    PiAdic sub(const PiAdic& x, const PiAdic& y) const;
    PiAdic neg(const PiAdic& x) const;
    PiAdic mul(const PiAdic& x, const PiAdic& y) const;
    PiAdic scale(const PiAdic& x, const std::vector<u64>& c) const;
    PiAdic pow(PiAdic x, u64 e) const;

    // Canonical representative mod pi^m: coefficient k reduced mod p^{ceil((m-k)/(p-1))}.
    PiAdic truncate(const PiAdic& x, int m) const;
    int valuation(const PiAdic& x) const;
    bool equal_mod(const PiAdic& x, const PiAdic& y, int m) const;
    // Printed after truncation to the ring's pi-adic precision.
    std::string str(const PiAdic& x) const;

private:
    const Qq* ring_;
    int m_;
    int np_;
    u64 modulus_;
    int cap_;
};

}  // namespace ffhyper

#pragma once

#include <vector>

#include "ffhyper/check.hpp"
#include "ffhyper/padic.hpp"
#include "ffhyper/rational.hpp"

namespace ffhyper {

// Residue in [0, m) of a rational whose denominator is prime to m.
u64 rational_residue(const Rational& x, u64 m);

// Morita gamma values Gamma_p(k) mod p^n for 0 <= k < p^n.
class GammaTable {
public:
    static constexpr u64 kMaxEntries = 100'000'000;

    GammaTable(u64 p, int n);

    u64 p() const { return p_; }
    int precision() const { return n_; }
    u64 modulus() const { return modulus_; }
    u64 at(u64 k) const { return values_[k % modulus_]; }
    // Gamma_p(x) mod p^n for p-integral x.
    u64 value(const Rational& x) const;
    const std::vector<u64>& values() const { return values_; }

private:
    u64 p_;
    int n_;
    u64 modulus_;
    std::vector<u64> values_;
};

GammaTable build_gamma_table(u64 p, int n);

QpNum gamma_p(const GammaTable& table, const Rational& x);

// Gamma_p(x) Gamma_p(1 - x) = (-1)^{x_0} for every residue x mod p^n.
std::vector<CheckCase> check_functional_equation(const GammaTable& table);

// The multiplication formula for Gamma_p with multiplier m, for x = k/(q-1), 0 <= k <= q-1.
std::vector<CheckCase> check_product_formula(const TeichmullerTable& teich, const GammaTable& table, i64 m);

// The pair of shifted-product identities for multiplier t, for every 0 <= j <= q-2.
std::vector<CheckCase> check_shifted_products(const TeichmullerTable& teich, const GammaTable& table, i64 t);

// prod_i Gamma_p(<(1 - m/(q-1)) p^i>) Gamma_p(<m p^i/(q-1)>) = (-1)^r omega-bar^m(-1) for 0 < m <= q-2,
// and the half-shifted variant for m != (q-1)/2.
std::vector<CheckCase> check_reflection_products(const TeichmullerTable& teich, const GammaTable& table);

}  // namespace ffhyper

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffhyper/modarith.hpp"

namespace ffhyper {

// Element of F_q, stored by its index: the coefficient vector (c_0, ..., c_{r-1})
// read as the base-p integer c_0 + c_1 p + ... + c_{r-1} p^{r-1}.
struct FqElem {
    std::uint32_t code = 0;

    bool is_zero() const { return code == 0; }
    friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

// Largest field order supported; the log and exp tables hold q entries each.
inline constexpr u64 kMaxFieldOrder = u64(1) << 20;

class FieldDesc {
public:
    // First irreducible monic modulus in the canonical order and the first primitive element.
    static FieldDesc build(std::uint32_t p, std::uint32_t r);
    // The index-th irreducible monic modulus (0-based) in the canonical order.
    static FieldDesc build_nth(std::uint32_t p, std::uint32_t r, std::uint32_t index);
    static FieldDesc from_modulus(std::uint32_t p, const std::vector<std::uint32_t>& modulus);

    std::uint32_t p() const { return p_; }
    std::uint32_t r() const { return r_; }
    std::uint32_t q() const { return q_; }
    std::uint32_t order() const { return q_ - 1; }  // of the multiplicative group
    // Coefficients c_0..c_r of the monic modulus; c_r = 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    FqElem generator() const { return generator_; }

    FqElem zero() const { return {0}; }
    FqElem one() const { return {1}; }
    // Image of an integer in the prime subfield.
    FqElem from_int(i64 n) const;
    // Missing trailing coefficients are zero; each coefficient is reduced mod p.
    FqElem from_coeffs(const std::vector<i64>& coeffs) const;
    std::vector<std::uint32_t> coeffs(FqElem x) const;
    std::uint32_t coeff(FqElem x, std::uint32_t i) const;

    FqElem add(FqElem x, FqElem y) const;
    FqElem sub(FqElem x, FqElem y) const;
    FqElem neg(FqElem x) const;
    FqElem mul(FqElem x, FqElem y) const;
    FqElem inv(FqElem x) const;
    FqElem div(FqElem x, FqElem y) const;
    FqElem pow(FqElem x, i64 e) const;
    FqElem square(FqElem x) const { return mul(x, x); }

    // generator^e
    FqElem exp(u64 e) const { return {exp_[e % order()]}; }
    std::uint32_t log(FqElem x) const;

    // "[c_0, ..., c_{r-1}]"
    std::string str(FqElem x) const;
    // Canonical serialization of (p, r, modulus, generator, log table).
    std::string bytes() const;

    bool operator==(const FieldDesc& o) const {
        return p_ == o.p_ && r_ == o.r_ && modulus_ == o.modulus_ && generator_ == o.generator_;
    }

private:
    FieldDesc() = default;
    void finish();

    std::uint32_t p_ = 0, r_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    FqElem generator_;
    std::vector<std::uint32_t> pow_p_;  // p^i for i <= r
    std::vector<std::uint32_t> exp_;    // exp_[e] = code of generator^e
    std::vector<std::uint32_t> log_;    // log_[code], code != 0
};

FieldDesc build_field(std::uint32_t p, std::uint32_t r);

// Irreducibility of a monic polynomial over Z/p (coefficients low to high).
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic);

std::uint32_t dlog(const FieldDesc& field, FqElem x);

// -1, 0 or +1
int quad_char(const FieldDesc& field, FqElem x);

std::uint32_t trace(const FieldDesc& field, FqElem x);

// m * dlog(x) mod (q-1), or nullopt for x = 0.
std::optional<u64> char_exponent(const FieldDesc& field, i64 m, FqElem x);

// Parses "c0,c1,..." into an element.
FqElem parse_element(const FieldDesc& field, const std::string& text);

}  // namespace ffhyper

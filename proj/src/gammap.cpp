#include "ffhyper/gammap.hpp"

#include "ffhyper/error.hpp"

namespace ffhyper {

namespace {

std::string scalar_str(u64 v, u64 p, int n) {
    if (v == 0) return qp_str(QpNum{n, 0, 0}, p);
    // Gamma values and roots of unity are units, so the valuation is 0.
    return qp_str(QpNum{0, v, n}, p);
}

u64 sign_mod(bool negative, u64 m) { return negative ? m - 1 : 1 % m; }

// omega(m)^e as a p-adic integer, for m in the prime subfield.
u64 omega_scalar(const TeichmullerTable& teich, i64 m, i64 e, u64 mod) {
    const FieldDesc& f = teich.field();
    FqElem x = f.from_int(m);
    u64 idx = reduce_signed((i128)f.log(x) * e, f.order());
    return teich.power(idx)[0] % mod;
}

void require_precision(const TeichmullerTable& teich, const GammaTable& table) {
    if (teich.field().p() != table.p()) throw Error(ErrorKind::DomainError, "Teichmuller table and gamma table differ in p");
    if (teich.precision() < table.precision())
        throw Error(ErrorKind::PrecisionExhausted, "Teichmuller table precision below gamma table precision");
}

}  // namespace

u64 rational_residue(const Rational& x, u64 m) {
    u64 den = static_cast<u64>(x.den()) % m;
    return mulmod(reduce_signed(x.num(), m), invmod(den, m), m);
}

GammaTable::GammaTable(u64 p, int n) : p_(p), n_(n) {
    if (n < 1) throw Error(ErrorKind::DomainError, "gamma table precision must be positive");
    modulus_ = prime_power(p, n);
    if (modulus_ > kMaxEntries)
        throw Error(ErrorKind::ResourceLimit, "gamma table with " + std::to_string(modulus_) + " entries exceeds the budget of " +
                                                  std::to_string(kMaxEntries));
    values_.resize(modulus_);
    values_[0] = 1 % modulus_;
    for (u64 k = 0; k + 1 < modulus_; ++k) {
        u64 prev = values_[k];
        values_[k + 1] = (k % p) ? negmod(mulmod(k % modulus_, prev, modulus_), modulus_) : negmod(prev, modulus_);
    }
}

u64 GammaTable::value(const Rational& x) const {
    if (x.den() % static_cast<i64>(p_) == 0)
        throw Error(ErrorKind::DomainError, "Gamma_p argument " + x.str() + " is not " + std::to_string(p_) + "-integral");
    return values_[rational_residue(x, modulus_)];
}

GammaTable build_gamma_table(u64 p, int n) { return GammaTable(p, n); }

QpNum gamma_p(const GammaTable& table, const Rational& x) { return {0, table.value(x), table.precision()}; }

std::vector<CheckCase> check_functional_equation(const GammaTable& table) {
    const u64 m = table.modulus(), p = table.p();
    std::vector<CheckCase> out;
    out.reserve(m);
    for (u64 x = 0; x < m; ++x) {
        u64 lhs = mulmod(table.at(x), table.at((m + 1 - x) % m), m);
        u64 x0 = x % p == 0 ? p : x % p;
        u64 rhs = sign_mod(x0 % 2 == 1, m);
        out.push_back({{{"x", static_cast<i64>(x)}},
                       scalar_str(lhs, p, table.precision()),
                       scalar_str(rhs, p, table.precision()),
                       lhs == rhs});
    }
    return out;
}

std::vector<CheckCase> check_product_formula(const TeichmullerTable& teich, const GammaTable& table, i64 m) {
    require_precision(teich, table);
    const FieldDesc& f = teich.field();
    const u64 mod = table.modulus();
    const i64 p = f.p(), q = f.q();
    if (m < 1 || m % p == 0) throw Error(ErrorKind::UnsupportedConfig, "multiplier must be positive and prime to p");
    std::vector<CheckCase> out;
    for (i64 k = 0; k <= q - 1; ++k) {
        Rational x(k, q - 1);
        u64 lhs = 1 % mod;
        u64 rhs = omega_scalar(teich, m, k - (q - 1), mod);
        i64 pi = 1;
        for (std::uint32_t i = 0; i < f.r(); ++i, pi *= p) {
            for (i64 h = 0; h < m; ++h) lhs = mulmod(lhs, table.value(((x + h) / m * pi).frac()), mod);
            rhs = mulmod(rhs, table.value((x * pi).frac()), mod);
            for (i64 h = 1; h < m; ++h) rhs = mulmod(rhs, table.value(Rational(h * pi, m).frac()), mod);
        }
        out.push_back({{{"m", m}, {"x", x.str()}},
                       scalar_str(lhs, p, table.precision()),
                       scalar_str(rhs, p, table.precision()),
                       lhs == rhs});
    }
    return out;
}

std::vector<CheckCase> check_shifted_products(const TeichmullerTable& teich, const GammaTable& table, i64 t) {
    require_precision(teich, table);
    const FieldDesc& f = teich.field();
    const u64 mod = table.modulus();
    const i64 p = f.p(), q = f.q();
    if (t < 1 || t % p == 0) throw Error(ErrorKind::UnsupportedConfig, "multiplier must be positive and prime to p");
    std::vector<CheckCase> out;
    for (i64 j = 0; j <= q - 2; ++j) {
        u64 l1 = omega_scalar(teich, t, t * j, mod), r1 = 1 % mod;
        u64 l2 = omega_scalar(teich, t, -t * j, mod), r2 = 1 % mod;
        i64 pi = 1;
        for (std::uint32_t i = 0; i < f.r(); ++i, pi *= p) {
            Rational shift(pi * j, q - 1);
            l1 = mulmod(l1, table.value((shift * t).frac()), mod);
            l2 = mulmod(l2, table.value((-(shift * t)).frac()), mod);
            for (i64 h = 1; h < t; ++h) {
                u64 g = table.value(Rational(h * pi, t).frac());
                l1 = mulmod(l1, g, mod);
                l2 = mulmod(l2, g, mod);
            }
            for (i64 h = 0; h < t; ++h) {
                r1 = mulmod(r1, table.value((Rational(pi * h, t) + shift).frac()), mod);
                r2 = mulmod(r2, table.value((Rational(pi * (1 + h), t) - shift).frac()), mod);
            }
        }
        out.push_back({{{"identity", "plus"}, {"t", t}, {"j", j}},
                       scalar_str(l1, p, table.precision()),
                       scalar_str(r1, p, table.precision()),
                       l1 == r1});
        out.push_back({{{"identity", "minus"}, {"t", t}, {"j", j}},
                       scalar_str(l2, p, table.precision()),
                       scalar_str(r2, p, table.precision()),
                       l2 == r2});
    }
    return out;
}

std::vector<CheckCase> check_reflection_products(const TeichmullerTable& teich, const GammaTable& table) {
    require_precision(teich, table);
    const FieldDesc& f = teich.field();
    const u64 mod = table.modulus();
    const i64 p = f.p(), q = f.q();
    const Rational half(1, 2);
    std::vector<CheckCase> out;
    for (i64 m = 0; m <= q - 2; ++m) {
        Rational y(m, q - 1);
        u64 omega_bar = omega_scalar(teich, -1, -m, mod);
        if (m > 0) {
            u64 lhs = 1 % mod;
            i64 pi = 1;
            for (std::uint32_t i = 0; i < f.r(); ++i, pi *= p)
                lhs = mulmod(lhs, mulmod(table.value(((1 - y) * pi).frac()), table.value((y * pi).frac()), mod), mod);
            u64 rhs = f.r() % 2 ? negmod(omega_bar, mod) : omega_bar;
            out.push_back({{{"part", "plain"}, {"m", m}},
                           scalar_str(lhs, p, table.precision()),
                           scalar_str(rhs, p, table.precision()),
                           lhs == rhs});
        }
        if (2 * m != q - 1) {
            u64 lhs = 1 % mod;
            i64 pi = 1;
            for (std::uint32_t i = 0; i < f.r(); ++i, pi *= p) {
                u64 g = table.value((half * pi).frac());
                u64 num = mulmod(table.value(((half - y) * pi).frac()), table.value(((half + y) * pi).frac()), mod);
                lhs = mulmod(lhs, mulmod(num, invmod(mulmod(g, g, mod), mod), mod), mod);
            }
            out.push_back({{{"part", "half-shifted"}, {"m", m}},
                           scalar_str(lhs, p, table.precision()),
                           scalar_str(omega_bar, p, table.precision()),
                           lhs == omega_bar});
        }
    }
    return out;
}

}  // namespace ffhyper

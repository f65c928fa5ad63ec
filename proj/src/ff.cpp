#include "ffhyper/ff.hpp"

#include <sstream>

#include "ffhyper/error.hpp"

namespace ffhyper {

namespace {

using Poly = std::vector<u64>;  // coefficients low to high, reduced mod p

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod f, f monic
Poly poly_mod(Poly a, const Poly& f, u64 p) {
    trim(a);
    size_t df = f.size() - 1;
    while (a.size() > df) {
        u64 lead = a.back();
        size_t shift = a.size() - 1 - df;
        for (size_t i = 0; i <= df; ++i) a[shift + i] = submod(a[shift + i], mulmod(lead, f[i], p), p);
        trim(a);
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(c), f, p);
}

Poly poly_powmod(Poly base, u64 e, const Poly& f, u64 p) {
    Poly result{1};
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return poly_mod(std::move(result), f, p);
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        u64 inv_lead = invmod(b.back(), p);
        Poly monic_b = b;
        for (auto& c : monic_b) c = mulmod(c, inv_lead, p);
        Poly r = poly_mod(a, monic_b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly to_poly(const std::vector<std::uint32_t>& v) { return Poly(v.begin(), v.end()); }

}  // namespace

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic) {
    Poly f = to_poly(monic);
    if (f.size() < 2 || f.back() != 1) return false;
    u64 r = f.size() - 1;
    if (r == 1) return true;
    const Poly x{0, 1};
    // x^(p^k) mod f for k = 0..r
    std::vector<Poly> frob{poly_mod(x, f, p)};
    for (u64 k = 1; k <= r; ++k) frob.push_back(poly_powmod(frob.back(), p, f, p));
    if (frob[r] != frob[0]) return false;
    for (u64 ell : prime_factors(r)) {
        Poly h = frob[r / ell];
        h.resize(std::max<size_t>(h.size(), 2), 0);
        h[1] = submod(h[1], 1, p);
        trim(h);
        if (h.empty()) return false;
        Poly g = poly_gcd(f, h, p);
        if (g.size() != 1) return false;
    }
    return true;
}

FieldDesc FieldDesc::build(std::uint32_t p, std::uint32_t r) { return build_nth(p, r, 0); }

FieldDesc FieldDesc::build_nth(std::uint32_t p, std::uint32_t r, std::uint32_t index) {
    if (p == 2 || !is_prime(p)) throw Error(ErrorKind::InvalidField, "p = " + std::to_string(p) + " is not an odd prime");
    if (r < 1) throw Error(ErrorKind::InvalidField, "degree must be at least 1");
    u64 q = 1;
    for (std::uint32_t i = 0; i < r; ++i) {
        q *= p;
        if (q > kMaxFieldOrder)
            throw Error(ErrorKind::ResourceLimit, "field order exceeds " + std::to_string(kMaxFieldOrder));
    }
    std::uint32_t seen = 0;
    for (u64 code = 0; code < q; ++code) {
        std::vector<std::uint32_t> f(r + 1);
        u64 c = code;
        for (std::uint32_t i = 0; i < r; ++i, c /= p) f[i] = static_cast<std::uint32_t>(c % p);
        f[r] = 1;
        if (!is_irreducible(p, f)) continue;
        if (seen++ == index) return from_modulus(p, f);
    }
    throw Error(ErrorKind::InvalidField, "fewer than " + std::to_string(index + 1) + " irreducible moduli");
}

FieldDesc FieldDesc::from_modulus(std::uint32_t p, const std::vector<std::uint32_t>& modulus) {
    if (p == 2 || !is_prime(p)) throw Error(ErrorKind::InvalidField, "p = " + std::to_string(p) + " is not an odd prime");
    if (modulus.size() < 2) throw Error(ErrorKind::InvalidField, "modulus must have degree at least 1");
    for (auto c : modulus)
        if (c >= p) throw Error(ErrorKind::InvalidField, "modulus coefficient out of range");
    if (!is_irreducible(p, modulus)) throw Error(ErrorKind::InvalidField, "modulus is not monic irreducible");
    FieldDesc f;
    f.p_ = p;
    f.r_ = static_cast<std::uint32_t>(modulus.size() - 1);
    u64 q = 1;
    for (std::uint32_t i = 0; i < f.r_; ++i) {
        q *= p;
        if (q > kMaxFieldOrder)
            throw Error(ErrorKind::ResourceLimit, "field order exceeds " + std::to_string(kMaxFieldOrder));
    }
    f.q_ = static_cast<std::uint32_t>(q);
    f.modulus_ = modulus;
    f.finish();
    return f;
}

void FieldDesc::finish() {
    pow_p_.assign(r_ + 1, 1);
    for (std::uint32_t i = 1; i <= r_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;

    Poly f = to_poly(modulus_);
    auto to_code = [&](const Poly& a) {
        std::uint32_t code = 0;
        for (size_t i = 0; i < a.size(); ++i) code += static_cast<std::uint32_t>(a[i]) * pow_p_[i];
        return code;
    };
    auto to_vec = [&](std::uint32_t code) {
        Poly a(r_);
        for (std::uint32_t i = 0; i < r_; ++i, code /= p_) a[i] = code % p_;
        trim(a);
        return a;
    };

    const u64 n = q_ - 1;
    const auto factors = prime_factors(n);
    std::uint32_t gen = 0;
    for (std::uint32_t code = 1; code < q_ && gen == 0; ++code) {
        Poly g = to_vec(code);
        bool primitive = true;
        for (u64 ell : factors) {
            if (poly_powmod(g, n / ell, f, p_) == Poly{1}) {
                primitive = false;
                break;
            }
        }
        if (primitive) gen = code;
    }
    if (gen == 0) throw Error(ErrorKind::InvalidField, "no primitive element found");
    generator_ = {gen};

    exp_.assign(n, 0);
    log_.assign(q_, 0);
    Poly g = to_vec(gen);
    Poly cur{1};
    for (u64 e = 0; e < n; ++e) {
        std::uint32_t c = to_code(cur);
        if (e > 0 && c == 1) throw Error(ErrorKind::InvalidField, "generator order is not q-1");
        exp_[e] = c;
        log_[c] = static_cast<std::uint32_t>(e);
        cur = poly_mulmod(cur, g, f, p_);
    }
}

FqElem FieldDesc::from_int(i64 n) const { return {static_cast<std::uint32_t>(reduce_signed(n, p_))}; }

FqElem FieldDesc::from_coeffs(const std::vector<i64>& coeffs) const {
    if (coeffs.size() > r_) throw Error(ErrorKind::DomainError, "too many coefficients for degree " + std::to_string(r_));
    std::uint32_t code = 0;
    for (size_t i = 0; i < coeffs.size(); ++i) code += static_cast<std::uint32_t>(reduce_signed(coeffs[i], p_)) * pow_p_[i];
    return {code};
}

std::vector<std::uint32_t> FieldDesc::coeffs(FqElem x) const {
    std::vector<std::uint32_t> v(r_);
    std::uint32_t c = x.code;
    for (std::uint32_t i = 0; i < r_; ++i, c /= p_) v[i] = c % p_;
    return v;
}

std::uint32_t FieldDesc::coeff(FqElem x, std::uint32_t i) const { return (x.code / pow_p_[i]) % p_; }

FqElem FieldDesc::add(FqElem x, FqElem y) const {
    std::uint32_t a = x.code, b = y.code, out = 0;
    for (std::uint32_t i = 0; i < r_; ++i) {
        std::uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        out += s * pow_p_[i];
        a /= p_;
        b /= p_;
    }
    return {out};
}

FqElem FieldDesc::neg(FqElem x) const {
    std::uint32_t a = x.code, out = 0;
    for (std::uint32_t i = 0; i < r_; ++i) {
        std::uint32_t c = a % p_;
        out += (c == 0 ? 0 : p_ - c) * pow_p_[i];
        a /= p_;
    }
    return {out};
}

FqElem FieldDesc::sub(FqElem x, FqElem y) const { return add(x, neg(y)); }

FqElem FieldDesc::mul(FqElem x, FqElem y) const {
    if (x.is_zero() || y.is_zero()) return zero();
    u64 e = u64(log_[x.code]) + log_[y.code];
    if (e >= order()) e -= order();
    return {exp_[e]};
}

FqElem FieldDesc::inv(FqElem x) const {
    if (x.is_zero()) throw Error(ErrorKind::DomainError, "inverse of zero in F_q");
    std::uint32_t l = log_[x.code];
    return {exp_[l == 0 ? 0 : order() - l]};
}

FqElem FieldDesc::div(FqElem x, FqElem y) const { return mul(x, inv(y)); }

FqElem FieldDesc::pow(FqElem x, i64 e) const {
    if (x.is_zero()) {
        if (e < 0) throw Error(ErrorKind::DomainError, "negative power of zero in F_q");
        return e == 0 ? one() : zero();
    }
    u64 k = reduce_signed((i128)log_[x.code] * e, order());
    return {exp_[k]};
}

std::uint32_t FieldDesc::log(FqElem x) const {
    if (x.is_zero()) throw Error(ErrorKind::DomainError, "discrete log of zero");
    return log_[x.code];
}

std::string FieldDesc::str(FqElem x) const {
    std::ostringstream os;
    os << '[';
    auto v = coeffs(x);
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ']';
    return os.str();
}

std::string FieldDesc::bytes() const {
    std::ostringstream os;
    os << p_ << ' ' << r_ << " |";
    for (auto c : modulus_) os << ' ' << c;
    os << " | " << generator_.code << " |";
    for (std::uint32_t c = 1; c < q_; ++c) os << ' ' << log_[c];
    return os.str();
}

FieldDesc build_field(std::uint32_t p, std::uint32_t r) { return FieldDesc::build(p, r); }

std::uint32_t dlog(const FieldDesc& field, FqElem x) { return field.log(x); }

int quad_char(const FieldDesc& field, FqElem x) {
    if (x.is_zero()) return 0;
    return (field.log(x) & 1) ? -1 : 1;
}

std::uint32_t trace(const FieldDesc& field, FqElem x) {
    if (x.is_zero()) return 0;
    u64 l = field.log(x);
    FqElem sum = field.zero();
    u64 pk = 1;
    for (std::uint32_t i = 0; i < field.r(); ++i) {
        sum = field.add(sum, field.exp(static_cast<u64>((u128)l * pk % field.order())));
        pk = pk * field.p() % field.order();
    }
    if (sum.code >= field.p()) throw Error(ErrorKind::DomainError, "trace left the prime subfield");
    return sum.code;
}

std::optional<u64> char_exponent(const FieldDesc& field, i64 m, FqElem x) {
    if (x.is_zero()) return std::nullopt;
    return reduce_signed((i128)m * field.log(x), field.order());
}

FqElem parse_element(const FieldDesc& field, const std::string& text) {
    std::vector<i64> coeffs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        i64 v = 0;
        try {
            v = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw Error(ErrorKind::ParseError, "bad element literal '" + text + "'");
        }
        while (pos < item.size() && item[pos] == ' ') ++pos;
        if (pos != item.size()) throw Error(ErrorKind::ParseError, "bad element literal '" + text + "'");
        coeffs.push_back(v);
    }
    if (coeffs.empty()) throw Error(ErrorKind::ParseError, "empty element literal");
    return field.from_coeffs(coeffs);
}

}  // namespace ffhyper

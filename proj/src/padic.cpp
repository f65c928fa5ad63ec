#include "ffhyper/padic.hpp"

#include <algorithm>
#include <sstream>

#include "ffhyper/error.hpp"

namespace ffhyper {

namespace {

int vp(u64 x, u64 p) {
    int v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

std::string vec_str(const std::vector<u64>& v) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << ']';
    return os.str();
}

void check_precision(int n, int max_n) {
    if (n < 0) throw Error(ErrorKind::DomainError, "negative precision");
    if (n > max_n)
        throw Error(ErrorKind::ResourceLimit,
                    "precision " + std::to_string(n) + " exceeds the 62-bit limit of " + std::to_string(max_n));
}

}  // namespace

QpNum embed_rational(const Rational& x, u64 p, int n) {
    check_precision(n, max_prime_power_exponent(p));
    if (x.den() % static_cast<i64>(p) == 0)
        throw Error(ErrorKind::NotPIntegral, x.str() + " is not " + std::to_string(p) + "-integral");
    if (x.num() == 0) return {n, 0, 0};
    i64 num = x.num();
    int v = 0;
    while (num % static_cast<i64>(p) == 0) {
        num /= static_cast<i64>(p);
        ++v;
    }
    u64 m = prime_power(p, n);
    u64 unit = mulmod(reduce_signed(num, m), invmod(static_cast<u64>(x.den()) % m, m), m);
    return {v, unit, n};
}

std::string qp_str(const QpNum& x, u64 p) {
    if (x.is_zero()) return "0 (mod " + std::to_string(p) + "^" + std::to_string(x.valuation) + ")";
    return std::to_string(p) + "^" + std::to_string(x.valuation) + " * [" + std::to_string(x.unit) + "] (mod " +
           std::to_string(p) + "^" + std::to_string(x.precision) + ")";
}

Qq::Qq(const FieldDesc& field)
    : field_(&field), p_(field.p()), r_(field.r()), max_precision_(max_prime_power_exponent(field.p())) {
    lifted_.assign(field.modulus().begin(), field.modulus().end() - 1);
}

u64 Qq::modulus_for(int n) const {
    check_precision(n, max_precision_);
    return prime_power(p_, n);
}

QqNum Qq::zero(int absolute_precision) const { return {absolute_precision, std::vector<u64>(r_, 0), 0}; }

QqNum Qq::from_int(i64 n, int precision) const { return from_rational(Rational(n), precision); }

QqNum Qq::from_rational(const Rational& x, int precision) const { return from_qp(embed_rational(x, p_, precision)); }

QqNum Qq::from_qp(const QpNum& x) const {
    if (x.is_zero()) return zero(x.valuation);
    std::vector<u64> v(r_, 0);
    v[0] = x.unit;
    return {x.valuation, std::move(v), x.precision};
}

QqNum Qq::make(int valuation, std::vector<u64> vec, int precision) const {
    if (precision <= 0) return zero(valuation + std::max(precision, 0));
    u64 m = modulus_for(precision);
    int k = precision;
    for (auto& c : vec) {
        c %= m;
        if (c != 0) k = std::min(k, vp(c, p_));
    }
    if (k == precision) return zero(valuation + precision);
    if (k > 0) {
        u64 pk = prime_power(p_, k);
        for (auto& c : vec) c /= pk;
    }
    return {valuation + k, std::move(vec), precision - k};
}

QqNum Qq::truncate(const QqNum& x, int a) const {
    if (x.is_zero()) return zero(std::min(x.valuation, a));
    if (a <= x.valuation) return zero(a);
    if (a >= x.absolute_precision()) return x;
    int n = a - x.valuation;
    u64 m = modulus_for(n);
    std::vector<u64> v = x.unit;
    for (auto& c : v) c %= m;
    return {x.valuation, std::move(v), n};
}

QqNum Qq::add(const QqNum& x, const QqNum& y) const {
    int a = std::min(x.absolute_precision(), y.absolute_precision());
    if (x.is_zero()) return truncate(y, a);
    if (y.is_zero()) return truncate(x, a);
    int v = std::min(x.valuation, y.valuation);
    if (a <= v) return zero(a);
    int n = a - v;
    u64 m = modulus_for(n);
    std::vector<u64> out(r_, 0);
    auto accumulate = [&](const QqNum& z) {
        int shift = z.valuation - v;
        if (shift >= n) return;
        u64 scale = prime_power(p_, shift);
        for (std::uint32_t i = 0; i < r_; ++i) out[i] = addmod(out[i], mulmod(z.unit[i] % m, scale, m), m);
    };
    accumulate(x);
    accumulate(y);
    return make(v, std::move(out), n);
}

QqNum Qq::neg(const QqNum& x) const {
    if (x.is_zero()) return x;
    u64 m = modulus_for(x.precision);
    QqNum out = x;
    for (auto& c : out.unit) c = negmod(c, m);
    return out;
}

QqNum Qq::sub(const QqNum& x, const QqNum& y) const { return add(x, neg(y)); }

QqNum Qq::mul(const QqNum& x, const QqNum& y) const {
    if (x.is_zero() || y.is_zero()) return zero(x.valuation + y.valuation);
    int n = std::min(x.precision, y.precision);
    u64 m = modulus_for(n);
    return {x.valuation + y.valuation, vec_mul(x.unit, y.unit, m), n};
}

QqNum Qq::inv(const QqNum& x) const {
    if (x.is_zero()) throw Error(ErrorKind::PrecisionExhausted, "inverse of a value indistinguishable from zero");
    return {-x.valuation, vec_inv(x.unit, x.precision), x.precision};
}

QqNum Qq::pow(const QqNum& x, u64 e) const {
    QqNum out = from_int(1, x.is_zero() ? max_precision_ : x.precision);
    QqNum base = x;
    while (e) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

bool Qq::equal_mod(const QqNum& x, const QqNum& y, int a) const {
    if (std::min(x.absolute_precision(), y.absolute_precision()) < a)
        throw Error(ErrorKind::PrecisionExhausted, "comparison requested beyond the known precision");
    QqNum d = sub(x, y);
    return d.is_zero() || d.valuation >= a;
}

FqElem Qq::reduce(const QqNum& x) const {
    if (x.is_zero() || x.valuation > 0) return field_->zero();
    if (x.valuation < 0) throw Error(ErrorKind::NotPIntegral, "reduction of a value with negative valuation");
    std::vector<i64> c(r_);
    for (std::uint32_t i = 0; i < r_; ++i) c[i] = static_cast<i64>(x.unit[i] % p_);
    return field_->from_coeffs(c);
}

std::string Qq::str(const QqNum& x) const {
    if (x.is_zero()) return "0 (mod " + std::to_string(p_) + "^" + std::to_string(x.valuation) + ")";
    return std::to_string(p_) + "^" + std::to_string(x.valuation) + " * " + vec_str(x.unit) + " (mod " +
           std::to_string(p_) + "^" + std::to_string(x.precision) + ")";
}

std::vector<u64> Qq::vec_mul(const std::vector<u64>& a, const std::vector<u64>& b, u64 m) const {
    if (r_ == 1) return {mulmod(a[0], b[0], m)};
    std::vector<u64> c(2 * r_ - 1, 0);
    for (std::uint32_t i = 0; i < r_; ++i) {
        if (a[i] == 0) continue;
        for (std::uint32_t j = 0; j < r_; ++j) c[i + j] = addmod(c[i + j], mulmod(a[i], b[j], m), m);
    }
    // u^r = -(c_0 + c_1 u + ... + c_{r-1} u^{r-1})
    for (std::uint32_t k = 2 * r_ - 2; k >= r_; --k) {
        u64 lead = c[k];
        if (lead == 0) continue;
        for (std::uint32_t i = 0; i < r_; ++i)
            c[k - r_ + i] = submod(c[k - r_ + i], mulmod(lead, lifted_[i] % m, m), m);
    }
    c.resize(r_);
    return c;
}

std::vector<u64> Qq::vec_pow(std::vector<u64> a, u64 e, u64 m) const {
    std::vector<u64> out(r_, 0);
    out[0] = 1 % m;
    while (e) {
        if (e & 1) out = vec_mul(out, a, m);
        a = vec_mul(a, a, m);
        e >>= 1;
    }
    return out;
}

std::vector<u64> Qq::vec_inv(const std::vector<u64>& a, int n) const {
    std::vector<i64> low(r_);
    for (std::uint32_t i = 0; i < r_; ++i) low[i] = static_cast<i64>(a[i] % p_);
    FqElem a0 = field_->from_coeffs(low);
    if (a0.is_zero()) throw Error(ErrorKind::DomainError, "vector is not a unit");
    auto inv0 = field_->coeffs(field_->inv(a0));
    std::vector<u64> y(inv0.begin(), inv0.end());
    // Newton step y <- y (2 - a y) doubles the number of correct digits.
    int k = 1;
    while (k < n) {
        k = std::min(2 * k, n);
        u64 m = modulus_for(k);
        std::vector<u64> ay = vec_mul(a, y, m);
        for (auto& c : ay) c = negmod(c, m);
        ay[0] = addmod(ay[0], 2 % m, m);
        y = vec_mul(y, ay, m);
    }
    return y;
}

QqNum teichmuller(const Qq& ring, FqElem x, int n) {
    if (x.is_zero()) return ring.zero(n);
    u64 m = ring.modulus_for(n);
    auto c = ring.field().coeffs(x);
    std::vector<u64> y(c.begin(), c.end());
    for (int i = 0; i < n * static_cast<int>(ring.r()); ++i) y = ring.vec_pow(std::move(y), ring.p(), m);
    return ring.make(0, std::move(y), n);
}

TeichmullerTable::TeichmullerTable(const Qq& ring, int n)
    : field_(&ring.field()), n_(n), modulus_(ring.modulus_for(n)), order_(ring.field().order()), r_(ring.r()) {
    QqNum w = teichmuller(ring, field_->generator(), n);
    data_.assign(order_ * r_, 0);
    std::vector<u64> cur(r_, 0);
    cur[0] = 1 % modulus_;
    for (u64 e = 0; e < order_; ++e) {
        std::copy(cur.begin(), cur.end(), data_.begin() + e * r_);
        cur = ring.vec_mul(cur, w.unit, modulus_);
    }
}

std::vector<u64> TeichmullerTable::lift(FqElem x) const {
    if (x.is_zero()) return std::vector<u64>(r_, 0);
    const u64* w = power(field_->log(x));
    return {w, w + r_};
}

std::vector<u64> TeichmullerTable::conj_power(FqElem x, i64 j) const {
    if (x.is_zero()) return std::vector<u64>(r_, 0);
    const u64* w = power(reduce_signed(-(i128)j * field_->log(x), order_));
    return {w, w + r_};
}

PiAdicRing::PiAdicRing(const Qq& ring, int m) : ring_(&ring), m_(m) {
    if (m < 1) throw Error(ErrorKind::DomainError, "pi-adic precision must be positive");
    int e = static_cast<int>(ring.p()) - 1;
    np_ = (m + e - 1) / e + 1;
    modulus_ = ring.modulus_for(np_);
    cap_ = e * np_;
}

PiAdic PiAdicRing::zero() const {
    return {std::vector<std::vector<u64>>(ring_->p() - 1, std::vector<u64>(ring_->r(), 0)), m_};
}

PiAdic PiAdicRing::one() const { return from_int(1); }

PiAdic PiAdicRing::from_int(i64 n) const {
    PiAdic x = zero();
    x.coeffs[0][0] = reduce_signed(n, modulus_);
    return x;
}

PiAdic PiAdicRing::from_zq(const std::vector<u64>& c) const {
    PiAdic x = zero();
    for (std::uint32_t i = 0; i < ring_->r(); ++i) x.coeffs[0][i] = c[i] % modulus_;
    return x;
}

PiAdic PiAdicRing::pi_power(int k) const {
    if (k < 0) throw Error(ErrorKind::DomainError, "negative power of pi");
    int e = static_cast<int>(ring_->p()) - 1;
    int a = k / e, b = k % e;
    PiAdic x = zero();
    if (a < np_) {
        u64 v = prime_power(ring_->p(), a);
        x.coeffs[b][0] = (a % 2) ? negmod(v, modulus_) : v;
    }
    return x;
}

PiAdic PiAdicRing::add(const PiAdic& x, const PiAdic& y) const {
    PiAdic z = x;
    for (size_t k = 0; k < z.coeffs.size(); ++k)
        for (size_t i = 0; i < z.coeffs[k].size(); ++i) z.coeffs[k][i] = addmod(x.coeffs[k][i], y.coeffs[k][i], modulus_);
    return z;
}

PiAdic PiAdicRing::neg(const PiAdic& x) const {
    PiAdic z = x;
    for (auto& c : z.coeffs)
        for (auto& v : c) v = negmod(v, modulus_);
    return z;
}

PiAdic PiAdicRing::sub(const PiAdic& x, const PiAdic& y) const { return add(x, neg(y)); }

PiAdic PiAdicRing::mul(const PiAdic& x, const PiAdic& y) const {
    const size_t e = ring_->p() - 1;
    PiAdic z = zero();
    const u64 minus_p = negmod(ring_->p() % modulus_, modulus_);
    for (size_t i = 0; i < e; ++i) {
        if (std::all_of(x.coeffs[i].begin(), x.coeffs[i].end(), [](u64 v) { return v == 0; })) continue;
        for (size_t j = 0; j < e; ++j) {
            std::vector<u64> prod = ring_->vec_mul(x.coeffs[i], y.coeffs[j], modulus_);
            size_t k = i + j;
            if (k >= e) {
                // pi^{p-1} = -p
                k -= e;
                for (auto& v : prod) v = mulmod(v, minus_p, modulus_);
            }
            for (size_t t = 0; t < prod.size(); ++t) z.coeffs[k][t] = addmod(z.coeffs[k][t], prod[t], modulus_);
        }
    }
    return z;
}

PiAdic PiAdicRing::scale(const PiAdic& x, const std::vector<u64>& c) const {
    PiAdic z = x;
    for (auto& coeff : z.coeffs) coeff = ring_->vec_mul(coeff, c, modulus_);
    return z;
}

PiAdic PiAdicRing::pow(PiAdic x, u64 e) const {
    PiAdic out = one();
    while (e) {
        if (e & 1) out = mul(out, x);
        x = mul(x, x);
        e >>= 1;
    }
    return out;
}

int PiAdicRing::valuation(const PiAdic& x) const {
    const int e = static_cast<int>(ring_->p()) - 1;
    int best = cap_;
    for (int k = 0; k < e; ++k) {
        for (u64 v : x.coeffs[k]) {
            if (v == 0) continue;
            best = std::min(best, e * vp(v, ring_->p()) + k);
        }
    }
    return best;
}

bool PiAdicRing::equal_mod(const PiAdic& x, const PiAdic& y, int m) const {
    if (m > cap_) throw Error(ErrorKind::PrecisionExhausted, "comparison beyond the pi-adic precision held");
    return valuation(sub(x, y)) >= m;
}

PiAdic PiAdicRing::truncate(const PiAdic& x, int m) const {
    const int e = static_cast<int>(ring_->p()) - 1;
    PiAdic z = x;
    z.pi_precision = std::min(m, x.pi_precision);
    for (int k = 0; k < e; ++k) {
        int digits = std::max(0, (z.pi_precision - k + e - 1) / e);
        u64 mod = digits >= np_ ? modulus_ : prime_power(ring_->p(), digits);
        for (auto& v : z.coeffs[k]) v %= mod;
    }
    return z;
}

std::string PiAdicRing::str(const PiAdic& x) const {
    PiAdic t = truncate(x, m_);
    std::ostringstream os;
    os << '[';
    for (size_t k = 0; k < t.coeffs.size(); ++k) os << (k ? ", " : "") << vec_str(t.coeffs[k]);
    os << "] (mod pi^" << t.pi_precision << ')';
    return os.str();
}

}  // namespace ffhyper

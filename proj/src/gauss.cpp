#include "ffhyper/gauss.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "ffhyper/error.hpp"

namespace ffhyper {

namespace {

std::string complex_str(ComplexVal z) {
    auto clean = [](double v) { return std::abs(v) < 5e-11 ? 0.0 : v; };
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.10f%+.10fi", clean(z.real()), clean(z.imag()));
    return buf;
}

std::string deviation_str(double dev) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "max deviation %.3e", dev);
    return buf;
}

std::string tolerance_str(double tol) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "tolerance %.3e", tol);
    return buf;
}

ComplexVal unit_root(double num, double den) { return std::polar(1.0, 2 * std::numbers::pi * num / den); }

}  // namespace

ComplexVal gauss_sum_complex(const FieldDesc& field, i64 m) {
    ComplexVal sum = 0;
    const double order = field.order();
    for (std::uint32_t code = 1; code < field.q(); ++code) {
        FqElem x{code};
        u64 e = *char_exponent(field, m, x);
        sum += unit_root(static_cast<double>(e), order) * unit_root(trace(field, x), field.p());
    }
    return sum;
}

ComplexOracle::ComplexOracle(const FieldDesc& field) : field_(&field) {
    const u64 order = field.order();
    roots_.resize(order);
    for (u64 e = 0; e < order; ++e) roots_[e] = unit_root(static_cast<double>(e), static_cast<double>(order));
    theta_.resize(field.q());
    for (std::uint32_t code = 0; code < field.q(); ++code) theta_[code] = unit_root(trace(field, FqElem{code}), field.p());
    gauss_.assign(order, 0);
    for (u64 m = 0; m < order; ++m) {
        ComplexVal sum = 0;
        for (std::uint32_t code = 1; code < field.q(); ++code)
            sum += roots_[m * field.log(FqElem{code}) % order] * theta_[code];
        gauss_[m] = sum;
    }
}

ComplexVal ComplexOracle::character(i64 m, FqElem x) const {
    if (x.is_zero()) return 0;
    return roots_[*char_exponent(*field_, m, x)];
}

ComplexVal ComplexOracle::theta(FqElem x) const { return theta_[x.code]; }

ComplexVal ComplexOracle::gauss(i64 m) const { return gauss_[reduce_signed(m, field_->order())]; }

GaussLemmaReport check_gauss_lemmas(const FieldDesc& field, double tol) {
    if (!(tol > 0)) throw Error(ErrorKind::DomainError, "tolerance must be positive");
    ComplexOracle oracle(field);
    const i64 order = field.order();
    const double q = field.q();
    GaussLemmaReport report;
    auto record = [&](std::vector<std::pair<std::string, ParamValue>> params, ComplexVal lhs, ComplexVal rhs) {
        double dev = std::abs(lhs - rhs);
        report.max_deviation = std::max(report.max_deviation, dev);
        bool ok = dev <= tol;
        report.passed = report.passed && ok;
        report.cases.push_back({std::move(params), complex_str(lhs), complex_str(rhs), ok});
    };
    const FqElem minus_one = field.neg(field.one());

    record({{"identity", "trivial-character"}}, oracle.gauss(0), -1.0);
    for (i64 m = 1; m < order; ++m)
        record({{"identity", "magnitude"}, {"m", m}}, std::abs(oracle.gauss(m)), std::sqrt(q));
    for (i64 k = 1; k < order; ++k)
        record({{"identity", "conjugate-product"}, {"k", k}}, oracle.gauss(k) * oracle.gauss(-k),
               q * oracle.character(k, minus_one));
    for (std::uint32_t code = 1; code < field.q(); ++code) {
        FqElem alpha{code};
        ComplexVal sum = 0;
        for (i64 m = 0; m < order; ++m) sum += oracle.gauss(-m) * oracle.character(m, alpha);
        record({{"identity", "theta-expansion"}, {"alpha", field.str(alpha)}}, oracle.theta(alpha),
               sum / static_cast<double>(order));
    }

    double worst = 0;
    for (std::uint32_t a = 0; a < field.q(); ++a)
        for (std::uint32_t b = 0; b < field.q(); ++b) {
            ComplexVal lhs = oracle.theta(field.add(FqElem{a}, FqElem{b}));
            worst = std::max(worst, std::abs(lhs - oracle.theta(FqElem{a}) * oracle.theta(FqElem{b})));
        }
    report.max_deviation = std::max(report.max_deviation, worst);
    report.passed = report.passed && worst <= tol;
    report.cases.push_back({{{"identity", "theta-additive"}}, deviation_str(worst), tolerance_str(tol), worst <= tol});

    ComplexVal theta_sum = 0;
    for (std::uint32_t code = 0; code < field.q(); ++code) theta_sum += oracle.theta(FqElem{code});
    record({{"identity", "theta-sum"}}, theta_sum, 0.0);

    for (i64 m = 0; m < order; ++m) {
        ComplexVal sum = 0;
        for (std::uint32_t code = 0; code < field.q(); ++code) sum += oracle.character(m, FqElem{code});
        record({{"identity", "orthogonality"}, {"m", m}}, sum, m == 0 ? static_cast<double>(order) : 0.0);
    }
    for (std::uint32_t code = 1; code < field.q(); ++code) {
        ComplexVal sum = 0;
        for (i64 m = 0; m < order; ++m) sum += oracle.character(m, FqElem{code});
        record({{"identity", "dual-orthogonality"}, {"x", field.str(FqElem{code})}}, sum,
               code == 1 ? static_cast<double>(order) : 0.0);
    }
    return report;
}

CheckCase davenport_hasse_case(const ComplexOracle& oracle, u64 k, i64 psi_index, double tol) {
    const FieldDesc& field = oracle.field();
    const u64 order = field.order();
    if (k == 0 || order % k != 0)
        throw Error(ErrorKind::UnsupportedConfig, "Davenport-Hasse needs q = 1 mod k");
    if (k % field.p() == 0) throw Error(ErrorKind::UnsupportedConfig, "Davenport-Hasse needs p not dividing k");
    const i64 step = static_cast<i64>(order / k);
    ComplexVal lhs = 1, prod_chi = 1;
    for (u64 i = 0; i < k; ++i) {
        lhs *= oracle.gauss(static_cast<i64>(i) * step + psi_index);
        prod_chi *= oracle.gauss(static_cast<i64>(i) * step);
    }
    FqElem kk = field.from_int(static_cast<i64>(k));
    FqElem k_pow = field.pow(kk, -static_cast<i64>(k));
    ComplexVal rhs = -oracle.gauss(static_cast<i64>(k) * psi_index) * oracle.character(psi_index, k_pow) * prod_chi;
    bool ok = std::abs(lhs - rhs) <= tol;
    return {{{"identity", "davenport-hasse"}, {"k", static_cast<i64>(k)}, {"psi", psi_index}},
            complex_str(lhs), complex_str(rhs), ok};
}

bool check_davenport_hasse(const FieldDesc& field, u64 k, i64 psi_index, double tol) {
    ComplexOracle oracle(field);
    return davenport_hasse_case(oracle, k, psi_index, tol).equal;
}

PiAdic zeta_p_piadic(const PiAdicRing& ring) {
    const u64 p = ring.base().p();
    const int m = ring.pi_precision();
    if (m < 2) throw Error(ErrorKind::DomainError, "pi-adic precision must be at least 2");
    auto cyclotomic = [&](const PiAdic& z) {
        PiAdic sum = ring.zero(), power = ring.one();
        for (u64 i = 0; i < p; ++i) {
            sum = ring.add(sum, power);
            power = ring.mul(power, z);
        }
        return sum;
    };
    PiAdic zeta = ring.add(ring.one(), ring.pi_power(1));
    const int slope = static_cast<int>(p) - 1;
    // Changing the pi^k digit moves the pi^{k+p-2} digit of Phi_p(zeta), so each digit is forced.
    for (int k = 2; k < m; ++k) {
        bool found = false;
        for (u64 d = 0; d < p && !found; ++d) {
            PiAdic cand = ring.add(zeta, ring.mul(ring.from_int(static_cast<i64>(d)), ring.pi_power(k)));
            if (ring.valuation(cyclotomic(cand)) >= k + slope) {
                zeta = cand;
                found = true;
            }
        }
        if (!found) throw std::logic_error("cyclotomic lift failed");
    }
    if (ring.valuation(cyclotomic(zeta)) < m) throw std::logic_error("cyclotomic lift failed");
    return zeta;
}

PiAdic zeta_p_piadic(u64 p, int m) {
    FieldDesc prime_field = FieldDesc::build(static_cast<std::uint32_t>(p), 1);
    Qq ring(prime_field);
    PiAdicRing pi_ring(ring, m);
    return zeta_p_piadic(pi_ring);
}

int GrossKoblitzOracle::gamma_precision_needed(u64 p, int m) {
    int e = static_cast<int>(p) - 1;
    return (m + e - 1) / e + 1;
}

GrossKoblitzOracle::GrossKoblitzOracle(const FieldDesc& field, const GammaTable& gamma, int m)
    : field_(&field),
      gamma_(&gamma),
      m_(m),
      ring_(field),
      pi_ring_(ring_, m),
      teich_(ring_, pi_ring_.coeff_digits()) {
    if (gamma.p() != field.p()) throw Error(ErrorKind::DomainError, "gamma table built for a different prime");
    if (gamma.precision() < pi_ring_.coeff_digits())
        throw Error(ErrorKind::PrecisionExhausted, "gamma table precision " + std::to_string(gamma.precision()) +
                                                       " below the " + std::to_string(pi_ring_.coeff_digits()) +
                                                       " digits needed for pi^" + std::to_string(m));
    PiAdic zeta = zeta_p_piadic(pi_ring_);
    zeta_powers_.push_back(pi_ring_.one());
    for (u64 t = 1; t < field.p(); ++t) zeta_powers_.push_back(pi_ring_.mul(zeta_powers_.back(), zeta));
    trace_.resize(field.q());
    for (std::uint32_t code = 0; code < field.q(); ++code) trace_[code] = trace(field, FqElem{code});
}

PiAdic GrossKoblitzOracle::gauss_sum(i64 a) const {
    const u64 mod = pi_ring_.coeff_modulus();
    const std::uint32_t r = field_->r();
    // Group the Teichmuller values by the trace of x, then weight by zeta^t.
    std::vector<std::vector<u64>> by_trace(field_->p(), std::vector<u64>(r, 0));
    for (std::uint32_t code = 1; code < field_->q(); ++code) {
        auto w = teich_.conj_power(FqElem{code}, a);
        auto& slot = by_trace[trace_[code]];
        for (std::uint32_t i = 0; i < r; ++i) slot[i] = addmod(slot[i], w[i] % mod, mod);
    }
    PiAdic sum = pi_ring_.zero();
    for (u64 t = 0; t < field_->p(); ++t) sum = pi_ring_.add(sum, pi_ring_.scale(zeta_powers_[t], by_trace[t]));
    return sum;
}

PiAdic GrossKoblitzOracle::gamma_product(i64 a) const {
    const u64 mod = pi_ring_.coeff_modulus();
    const i64 p = field_->p(), q = field_->q();
    Rational exponent_sum(0);
    u64 prod = 1 % mod;
    i64 pi = 1;
    for (std::uint32_t i = 0; i < field_->r(); ++i, pi *= p) {
        Rational x = Rational(a * pi, q - 1).frac();
        exponent_sum += x;
        prod = mulmod(prod, gamma_->value(x) % mod, mod);
    }
    Rational s = exponent_sum * (p - 1);
    if (!s.is_integer()) throw std::logic_error("pi exponent is not an integer");
    return pi_ring_.mul(pi_ring_.pi_power(static_cast<int>(s.num())), pi_ring_.from_int(-static_cast<i64>(prod)));
}

CheckCase GrossKoblitzOracle::check(i64 a) const {
    PiAdic lhs = gauss_sum(a);
    PiAdic rhs = gamma_product(a);
    return {{{"a", a}}, pi_ring_.str(lhs), pi_ring_.str(rhs), pi_ring_.equal_mod(lhs, rhs, m_)};
}

bool check_gross_koblitz(const FieldDesc& field, i64 a, const GammaTable& gamma, int m) {
    if (a < 0 || a > static_cast<i64>(field.q()) - 2) throw Error(ErrorKind::DomainError, "a must lie in [0, q-2]");
    return GrossKoblitzOracle(field, gamma, m).check(a).equal;
}

}  // namespace ffhyper

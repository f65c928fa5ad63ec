#include "ffhyper/counts.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "ffhyper/error.hpp"

namespace ffhyper {

namespace {

void validate(const FieldDesc& field, const CurveFamily& fam) {
    if (fam.a.is_zero() || fam.b.is_zero()) throw Error(ErrorKind::DomainError, "curve coefficients a, b must be nonzero");
    require_admissible_degree(field.p(), fam.d);
}

ParamFamily family_of(const CurveFamily& fam) {
    if (fam.d % 2 == 0) return ParamFamily::EvenDegree;
    return fam.shape == CurveShape::Linear ? ParamFamily::OddDegree : ParamFamily::OddDegreePrimed;
}

FqElem family_argument(const FieldDesc& field, const CurveFamily& fam) {
    FqElem y0 = field.zero();
    FqElem t = fam.shape == CurveShape::Linear ? linear_argument(field, fam.d, fam.a, fam.b, y0)
                                               : subleading_argument(field, fam.d, fam.a, fam.b, y0);
    return fam.d % 2 == 0 ? t : field.neg(t);
}

FqElem horner(const FieldDesc& field, const std::vector<FqElem>& coeffs, FqElem x) {
    FqElem acc = field.zero();
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = field.add(field.mul(acc, x), *it);
    return acc;
}

}  // namespace

const char* shape_name(CurveShape shape) { return shape == CurveShape::Linear ? "linear" : "subleading"; }

CurveShape parse_shape(const std::string& text) {
    if (text == "linear") return CurveShape::Linear;
    if (text == "subleading") return CurveShape::Subleading;
    throw Error(ErrorKind::ParseError, "shape must be 'linear' or 'subleading'");
}

std::vector<FqElem> family_polynomial(const FieldDesc& field, const CurveFamily& fam) {
    std::vector<FqElem> c(fam.d + 1, field.zero());
    c[0] = fam.b;
    c[fam.shape == CurveShape::Linear ? 1 : fam.d - 1] = fam.a;
    c[fam.d] = field.one();
    return c;
}

u64 count_curve_points(const FieldDesc& field, const CurveFamily& fam) {
    auto poly = family_polynomial(field, fam);
    u64 n = 0;
    for (std::uint32_t code = 0; code < field.q(); ++code) n += 1 + quad_char(field, horner(field, poly, FqElem{code}));
    return n;
}

u64 count_poly_roots(const FieldDesc& field, const std::vector<FqElem>& coeffs) {
    bool all_zero = std::all_of(coeffs.begin(), coeffs.end(), [](FqElem c) { return c.is_zero(); });
    if (all_zero) throw Error(ErrorKind::DomainError, "the zero polynomial has no finite root count");
    u64 n = 0;
    for (std::uint32_t code = 0; code < field.q(); ++code) n += horner(field, coeffs, FqElem{code}).is_zero();
    return n;
}

u64 count_power_solutions(const FieldDesc& field, u64 k, FqElem gamma) {
    if (gamma.is_zero()) throw Error(ErrorKind::DomainError, "x^k = 0 is outside the multiplicative group");
    if (k == 0) throw Error(ErrorKind::DomainError, "exponent must be positive");
    u64 count = 0;
    for (std::uint32_t code = 1; code < field.q(); ++code) count += field.pow(FqElem{code}, static_cast<i64>(k)) == gamma;

    // chi = T^{(q-1)/D} has order D; chi^j(gamma) = exp(2 pi i j dlog(gamma) / D).
    const u64 order = std::gcd<u64>(k, field.order());
    const u64 step = field.order() / order;
    std::complex<double> sum = 0;
    for (u64 j = 0; j < order; ++j) {
        u64 e = *char_exponent(field, static_cast<i64>(j * step), gamma);
        sum += std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(e) / field.order());
    }
    if (std::abs(sum - static_cast<double>(count)) > 1e-6)
        throw std::logic_error("power count disagrees with the character sum");
    return count;
}

FqElem linear_argument(const FieldDesc& field, int d, FqElem a, FqElem b, FqElem y) {
    FqElem dd = field.from_int(d), d1 = field.from_int(d - 1);
    FqElem inner = field.div(field.mul(field.sub(b, field.square(y)), dd), field.mul(a, d1));
    return field.mul(field.div(dd, a), field.pow(inner, d - 1));
}

FqElem subleading_argument(const FieldDesc& field, int d, FqElem a, FqElem b, FqElem y) {
    FqElem dd = field.from_int(d), d1 = field.from_int(d - 1);
    FqElem inner = field.div(dd, field.mul(a, d1));
    return field.mul(field.div(field.mul(dd, field.sub(b, field.square(y))), a), field.pow(inner, d - 1));
}

GSpec point_count_spec(const CurveFamily& fam) { return build_params(family_of(fam), fam.d).reduced; }

GSpec root_count_spec(const CurveFamily& fam) { return build_params(family_of(fam), fam.d).main; }

QqNum predicted_curve_points(const GContext& ctx, const CurveFamily& fam, int n) {
    const FieldDesc& field = ctx.field();
    const Qq& ring = ctx.ring();
    validate(field, fam);
    const int r = static_cast<int>(field.r());
    const i64 q = field.q();
    GValue g = eval_G(ctx, point_count_spec(fam), family_argument(field, fam), std::max(1, n - r));

    int sign = 1;
    if (fam.d % 2 == 0) {
        if (fam.shape == CurveShape::Subleading) sign = quad_char(field, fam.b);
    } else {
        sign = fam.shape == CurveShape::Linear ? quad_char(field, field.neg(field.mul(fam.a, fam.b))) : quad_char(field, fam.b);
    }
    i64 constant = fam.d % 2 == 0 ? q - 1 : q;
    QqNum term = ring.mul(ring.from_int(-sign * q, std::min(ring.max_precision(), n + fam.d * r)), g.value);
    return ring.truncate(ring.add(ring.from_int(constant, n), term), n);
}

QqNum predicted_root_count(const GContext& ctx, const CurveFamily& fam, int n) {
    const FieldDesc& field = ctx.field();
    const Qq& ring = ctx.ring();
    validate(field, fam);
    GValue g = eval_G(ctx, root_count_spec(fam), family_argument(field, fam), n);
    FqElem s;
    if (fam.d % 2 == 0)
        s = field.neg(fam.b);
    else
        s = fam.shape == CurveShape::Linear ? field.neg(fam.a) : field.neg(field.mul(fam.a, fam.b));
    QqNum term = ring.mul(ring.from_int(quad_char(field, s), n), g.value);
    return ring.truncate(ring.add(ring.from_int(1, n), term), n);
}

int prediction_digits(const FieldDesc& field, const CurveFamily& fam, int n) {
    const int r = static_cast<int>(field.r());
    return std::max(PreparedG::digits_needed(field, point_count_spec(fam), std::max(1, n - r)),
                    PreparedG::digits_needed(field, root_count_spec(fam), n));
}

const char* floor_lemma_name(FloorLemma lemma) {
    switch (lemma) {
        case FloorLemma::Even: return "even";
        case FloorLemma::Odd: return "odd";
        case FloorLemma::OddDoubled: return "odd-doubled";
    }
    return "";
}

std::vector<CheckCase> check_floor_lemma(u64 p, std::uint32_t r, int d, FloorLemma lemma) {
    require_admissible_degree(p, d);
    const bool even = lemma == FloorLemma::Even;
    if (even != (d % 2 == 0) || d < (even ? 4 : 3))
        throw Error(ErrorKind::UnsupportedConfig, std::string(floor_lemma_name(lemma)) + " floor identity does not apply to d = " +
                                                      std::to_string(d));
    i64 q = 1;
    for (std::uint32_t i = 0; i < r; ++i) q *= static_cast<i64>(p);
    auto fl = [](const Rational& x) { return x.floor(); };
    auto fr = [](const Rational& x) { return x.frac(); };

    std::vector<CheckCase> out;
    const i64 m_lo = lemma == FloorLemma::OddDoubled ? 0 : 1;
    for (i64 m = m_lo; m <= q - 2; ++m) {
        if (lemma != FloorLemma::Odd && 2 * m == q - 1) continue;
        i64 pi = 1;
        for (std::uint32_t i = 0; i < r; ++i, pi *= static_cast<i64>(p)) {
            Rational y(m * pi, q - 1);
            i64 lhs = 0, rhs = 0;
            if (lemma == FloorLemma::OddDoubled) {
                lhs = fl(y * -2) + fl(y * (2 * d)) + fl(y * (-2 * (d - 1))) - fl(-y) - fl(y * d) - fl(y * (-(d - 1)));
                for (int h = 1; h <= 2 * d - 3; h += 2) rhs += fl(fr(Rational(h * pi, 2 * (d - 1))) - y);
                for (int h = 1; h <= 2 * d - 1; h += 2)
                    if (h != d) rhs += fl(fr(Rational(-h * pi, 2 * d)) + y);
            } else {
                lhs = fl(y * -2) + fl(y * d) + fl(y * (-(d - 1))) - fl(-y) + 1;
                for (int h = 1; h <= d - 2; ++h) rhs += fl(fr(Rational(h * pi, d - 1)) - y);
                if (!even) rhs += fl(fr(Rational(pi, 2)) - y);
                for (int h = 1; h <= d - 1; ++h)
                    if (!even || 2 * h != d) rhs += fl(fr(Rational(-h * pi, d)) + y);
            }
            out.push_back({{{"lemma", floor_lemma_name(lemma)}, {"d", d}, {"m", m}, {"i", static_cast<i64>(i)}},
                           std::to_string(lhs),
                           std::to_string(rhs),
                           lhs == rhs});
        }
    }
    return out;
}

int pinning_precision(u64 p, u64 bound) {
    int n = 0;
    u64 v = 1;
    while (v <= bound) {
        v *= p;
        ++n;
    }
    return std::max(n, 1);
}

}  // namespace ffhyper

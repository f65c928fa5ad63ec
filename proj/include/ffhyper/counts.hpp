#pragma once

#include <vector>

#include "ffhyper/check.hpp"
#include "ffhyper/ff.hpp"
#include "ffhyper/gfun.hpp"
#include "ffhyper/padic.hpp"

namespace ffhyper {

enum class CurveShape {
    Linear,      // y^2 = x^d + ax + b
    Subleading,  // y^2 = x^d + ax^{d-1} + b
};

const char* shape_name(CurveShape shape);
CurveShape parse_shape(const std::string& text);

struct CurveFamily {
    int d = 3;
    FqElem a;
    FqElem b;
    CurveShape shape = CurveShape::Linear;
};

// x^d + a x + b or x^d + a x^{d-1} + b, coefficients low to high.
std::vector<FqElem> family_polynomial(const FieldDesc& field, const CurveFamily& fam);

// Affine points: sum over x of 1 + phi(rhs(x)).
u64 count_curve_points(const FieldDesc& field, const CurveFamily& fam);

// Distinct roots in F_q of the polynomial with the given coefficients (low to high).
u64 count_poly_roots(const FieldDesc& field, const std::vector<FqElem>& coeffs);

// Solutions of x^k = gamma, cross-checked against the character sum over characters of order gcd(k, q-1).
u64 count_power_solutions(const FieldDesc& field, u64 k, FqElem gamma);

// (d/a) ((b - y^2) d / (a(d-1)))^{d-1}
FqElem linear_argument(const FieldDesc& field, int d, FqElem a, FqElem b, FqElem y);
// (d (b - y^2) / a) (d / (a(d-1)))^{d-1}
FqElem subleading_argument(const FieldDesc& field, int d, FqElem a, FqElem b, FqElem y);

// The G-function specs the closed forms use.
GSpec point_count_spec(const CurveFamily& fam);
GSpec root_count_spec(const CurveFamily& fam);

// Closed-form point count, known to absolute precision n.
QqNum predicted_curve_points(const GContext& ctx, const CurveFamily& fam, int n);
// Closed-form root count of the trinomial, known to absolute precision n.
QqNum predicted_root_count(const GContext& ctx, const CurveFamily& fam, int n);

// Working precision the two predictions need at absolute precision n.
int prediction_digits(const FieldDesc& field, const CurveFamily& fam, int n);

enum class FloorLemma {
    Even,        // d even, 1 <= m <= q-2, m != (q-1)/2
    Odd,         // d odd, 1 <= m <= q-2
    OddDoubled,  // d odd, 0 <= m <= q-2, m != (q-1)/2
};

const char* floor_lemma_name(FloorLemma lemma);

// Both sides of the floor-sum identity for every admissible m and every 0 <= i < r.
std::vector<CheckCase> check_floor_lemma(u64 p, std::uint32_t r, int d, FloorLemma lemma);

// Smallest n with p^n > bound.
int pinning_precision(u64 p, u64 bound);

}  // namespace ffhyper

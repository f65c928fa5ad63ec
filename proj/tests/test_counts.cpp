#include <doctest.h>

#include "ffhyper/counts.hpp"
#include "ffhyper/error.hpp"
#include "ffhyper/harness.hpp"
#include "oracles.hpp"

using namespace ffhyper;

namespace {

// Pairs (x, y) with y^2 = x^d + a x^k + b, counted one by one.
i64 naive_points(const oracle::NaiveField& f, int d, int k, i64 a, i64 b) {
    i64 n = 0;
    for (i64 x = 0; x < f.q; ++x) {
        i64 rhs = f.add(f.add(f.pow(x, d), f.mul(a, f.pow(x, k))), b);
        for (i64 y = 0; y < f.q; ++y) n += f.mul(y, y) == rhs;
    }
    return n;
}

i64 naive_roots(const oracle::NaiveField& f, int d, int k, i64 a, i64 b) {
    i64 n = 0;
    for (i64 x = 0; x < f.q; ++x) n += f.add(f.add(f.pow(x, d), f.mul(a, f.pow(x, k))), b) == 0;
    return n;
}

bool prediction_holds(const FieldDesc& field, const CurveFamily& fam) {
    const int np = pinning_precision(field.p(), 2 * field.q());
    const int nr = pinning_precision(field.p(), static_cast<u64>(fam.d));
    GContext ctx(field, std::max(prediction_digits(field, fam, np), prediction_digits(field, fam, nr)));
    const Qq& ring = ctx.ring();
    bool ok = ring.equal_mod(predicted_curve_points(ctx, fam, np), ring.from_int(static_cast<i64>(count_curve_points(field, fam)), np), np);
    u64 roots = count_poly_roots(field, family_polynomial(field, fam));
    return ok && ring.equal_mod(predicted_root_count(ctx, fam, nr), ring.from_int(static_cast<i64>(roots), nr), nr);
}

}  // namespace

TEST_SUITE("counts") {
    TEST_CASE("point counts over F_5") {
        auto f = FieldDesc::build(5, 1);
        CHECK(count_curve_points(f, {3, f.one(), f.one(), CurveShape::Linear}) == 8);
        CHECK(count_curve_points(f, {4, f.one(), f.one(), CurveShape::Linear}) == 7);
    }

    TEST_CASE("point and root counts agree with direct enumeration") {
        for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 1}, {7, 1}, {3, 2}, {11, 1}}) {
            auto f = FieldDesc::build(p, r);
            auto naive = oracle::naive_field(p, static_cast<int>(r));
            Lcg rng(p);
            for (int trial = 0; trial < 20; ++trial) {
                std::uint32_t a = 1 + rng.next() % (f.q() - 1), b = 1 + rng.next() % (f.q() - 1);
                for (int d : {3, 4, 5}) {
                    for (auto shape : {CurveShape::Linear, CurveShape::Subleading}) {
                        int k = shape == CurveShape::Linear ? 1 : d - 1;
                        CurveFamily fam{d, {a}, {b}, shape};
                        REQUIRE(static_cast<i64>(count_curve_points(f, fam)) == naive_points(naive, d, k, a, b));
                        REQUIRE(static_cast<i64>(count_poly_roots(f, family_polynomial(f, fam))) == naive_roots(naive, d, k, a, b));
                    }
                }
            }
        }
    }

    TEST_CASE("roots of fixed polynomials") {
        auto f = FieldDesc::build(5, 1);
        CHECK(count_poly_roots(f, {f.zero(), f.from_int(-1), f.zero(), f.one()}) == 3);
        CHECK(count_poly_roots(f, {f.one(), f.zero(), f.one()}) == 2);
        CHECK_THROWS_AS(count_poly_roots(f, {f.zero(), f.zero()}), Error);
    }

    TEST_CASE("power solutions") {
        auto f = FieldDesc::build(7, 1);
        CHECK(count_power_solutions(f, 3, f.from_int(2)) == 0);
        CHECK(count_power_solutions(f, 3, f.from_int(1)) == 3);
        for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {5, 2}, {7, 2}}) {
            auto g = FieldDesc::build(p, r);
            auto naive = oracle::naive_field(p, static_cast<int>(r));
            for (u64 k = 2; k <= 8; ++k)
                for (std::uint32_t c = 1; c < g.q(); ++c) {
                    i64 n = 0;
                    for (i64 x = 1; x < naive.q; ++x) n += naive.pow(x, static_cast<i64>(k)) == c;
                    REQUIRE(static_cast<i64>(count_power_solutions(g, k, {c})) == n);
                }
        }
    }

    TEST_CASE("closed-form arguments") {
        auto f = FieldDesc::build(7, 1);
        FqElem a = f.from_int(2), b = f.from_int(3), y = f.from_int(5);
        // d = 4: 256 (b - y^2)^3 / (27 a^4)
        FqElem u = f.sub(b, f.square(y));
        CHECK(linear_argument(f, 4, a, b, y) == f.div(f.mul(f.from_int(256), f.pow(u, 3)), f.mul(f.from_int(27), f.pow(a, 4))));
        // d = 3: 27 (b - y^2)^2 / (4 a^3)
        CHECK(linear_argument(f, 3, a, b, y) == f.div(f.mul(f.from_int(27), f.pow(u, 2)), f.mul(f.from_int(4), f.pow(a, 3))));
    }

    TEST_CASE("closed-form predictions") {
        auto f5 = FieldDesc::build(5, 1);
        CHECK(prediction_holds(f5, {3, f5.one(), f5.one(), CurveShape::Linear}));
        CHECK(prediction_holds(f5, {4, f5.one(), f5.one(), CurveShape::Linear}));
        CHECK(prediction_holds(f5, {3, f5.one(), f5.from_int(2), CurveShape::Subleading}));
        auto f7 = FieldDesc::build(7, 1);
        CHECK(prediction_holds(f7, {3, f7.one(), f7.one(), CurveShape::Linear}));
        CHECK(prediction_holds(f7, {4, f7.one(), f7.one(), CurveShape::Linear}));
        auto f9 = FieldDesc::build(3, 2);
        for (std::uint32_t a = 1; a < 9; ++a)
            for (std::uint32_t b = 1; b < 9; ++b) REQUIRE(prediction_holds(f9, {5, {a}, {b}, CurveShape::Subleading}));
    }

    TEST_CASE("floor identities") {
        auto cases = check_floor_lemma(5, 1, 4, FloorLemma::Even);
        REQUIRE(cases.size() == 2);
        // d = 4, q = 5, m = 1, i = 0: (-1) + 1 + (-1) - (-1) + 1 = 1 on the left, 0 + 1 on the right
        CHECK(cases[0].lhs == "1");
        CHECK(cases[0].rhs == "1");
        for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 2}}) {
            for (int d = 3; d <= 7; ++d) {
                if (d % p == 0 || (d - 1) % p == 0) continue;
                std::vector<FloorLemma> lemmas = d % 2 ? std::vector{FloorLemma::Odd, FloorLemma::OddDoubled} : std::vector{FloorLemma::Even};
                for (auto lemma : lemmas)
                    for (const auto& c : check_floor_lemma(p, r, d, lemma)) REQUIRE(c.equal);
            }
        }
        CHECK_THROWS_AS(check_floor_lemma(5, 1, 3, FloorLemma::Even), Error);
        CHECK_THROWS_AS(check_floor_lemma(5, 1, 5, FloorLemma::Odd), Error);
    }

    TEST_CASE("pinning precision") {
        CHECK(pinning_precision(5, 10) == 2);
        CHECK(pinning_precision(5, 25) == 3);
        CHECK(pinning_precision(13, 338) == 3);
        CHECK(pinning_precision(7, 3) == 1);
    }
}

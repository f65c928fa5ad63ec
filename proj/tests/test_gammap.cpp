#include <doctest.h>

#include "ffhyper/error.hpp"
#include "ffhyper/gammap.hpp"
#include "ffhyper/harness.hpp"
#include "oracles.hpp"

using namespace ffhyper;

namespace {

bool all_equal(const std::vector<CheckCase>& cases) {
    for (const auto& c : cases)
        if (!c.equal) return false;
    return !cases.empty();
}

}  // namespace

TEST_SUITE("gammap") {
    TEST_CASE("table values mod 25") {
        GammaTable t(5, 2);
        CHECK(t.values()[0] == 1);
        CHECK(t.values()[1] == 24);
        CHECK(t.values()[5] == 1);
        CHECK(t.values()[13] == 18);
        auto half = gamma_p(t, Rational(1, 2));
        CHECK(half.unit == 18);
        CHECK(half.valuation == 0);
        CHECK(t.value(Rational(0)) == 1);
        CHECK(t.value(Rational(1)) == 24);
    }

    TEST_CASE("every value is a unit") {
        GammaTable t(5, 4);
        for (u64 v : t.values()) REQUIRE(v % 5 != 0);
    }

    TEST_CASE("table agrees with the defining product") {
        for (auto [p, n] : std::vector<std::pair<u64, int>>{{3, 7}, {5, 5}, {7, 4}, {11, 3}, {13, 3}}) {
            GammaTable t(p, n);
            auto ref = oracle::gamma_by_product(p, n);
            REQUIRE(t.values() == ref);
        }
    }

    TEST_CASE("Gamma_p(x + 1) = -x Gamma_p(x) for units, -Gamma_p(x) otherwise") {
        GammaTable t(7, 4);
        Lcg rng(5);
        for (int k = 0; k < 2000; ++k) {
            i64 num = static_cast<i64>(rng.next() % 1000) - 500;
            i64 den = static_cast<i64>(1 + rng.next() % 60);
            if (den % 7 == 0) continue;
            Rational x(num, den);
            u64 m = t.modulus();
            u64 lhs = t.value(x + Rational(1));
            u64 xr = rational_residue(x, m);
            u64 rhs = xr % 7 ? oracle::mulm(m - xr, t.value(x), m) % m : (m - t.value(x)) % m;
            REQUIRE(lhs == rhs);
        }
    }

    TEST_CASE("functional equation for all residues") {
        for (u64 p : {3u, 5u, 7u}) {
            GammaTable t(p, 4);
            auto cases = check_functional_equation(t);
            CHECK(cases.size() == t.modulus());
            CHECK(all_equal(cases));
        }
    }

    TEST_CASE("multiplication formula, shifted products and reflection products") {
        for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 1}, {7, 1}, {3, 2}, {5, 2}}) {
            auto f = FieldDesc::build(p, r);
            Qq ring(f);
            GammaTable table(p, 4);
            TeichmullerTable teich(ring, 4);
            for (i64 m : {2, 3, 4, 6}) {
                if (m % p == 0) continue;
                CHECK(all_equal(check_product_formula(teich, table, m)));
                CHECK(all_equal(check_shifted_products(teich, table, m)));
            }
            CHECK(all_equal(check_reflection_products(teich, table)));
        }
    }

    TEST_CASE("non p-integral arguments and oversized tables are refused") {
        GammaTable t(5, 3);
        try {
            t.value(Rational(1, 5));
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::DomainError);
        }
        try {
            GammaTable big(13, 8);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::ResourceLimit);
        }
    }
}

#include <doctest.h>

#include <algorithm>

#include "ffhyper/error.hpp"
#include "ffhyper/gfun.hpp"
#include "ffhyper/harness.hpp"
#include "oracles.hpp"

using namespace ffhyper;

namespace {

std::vector<Rational> rl(const std::string& s) { return parse_rational_list(s); }

GSpec spec(const std::string& up, const std::string& low) { return {rl(up), rl(low)}; }

std::vector<oracle::Frac> to_fracs(const std::vector<Rational>& v) {
    std::vector<oracle::Frac> out;
    for (const auto& x : v) out.push_back({x.num(), x.den()});
    return out;
}

// p^{-e} value mod p^k for r = 1.
u64 scaled_residue(const QqNum& x, u64 p, int e, int k) {
    if (x.is_zero()) return 0;
    u64 m = oracle::powm(p, k, ~0ULL);
    REQUIRE(x.valuation >= e);
    return oracle::mulm(x.unit[0] % m, oracle::powm(p, x.valuation - e, m), m);
}

}  // namespace

TEST_SUITE("gfun") {
    TEST_CASE("parameter families") {
        auto even = build_params(ParamFamily::EvenDegree, 4);
        CHECK(even.main.str() == "[1/6, 1/2, 5/6; 0, 1/4, 3/4]");
        CHECK(even.reduced.str() == "[1/3, 2/3; 1/4, 3/4]");
        auto odd = build_params(ParamFamily::OddDegree, 3);
        CHECK(odd.main.str() == "[0, 1/2; 1/6, 5/6]");
        auto primed = build_params(ParamFamily::OddDegreePrimed, 3);
        CHECK(primed.reduced.str() == "[1/2, 1/2; 1/3, 2/3]");
        CHECK(build_params(ParamFamily::EvenDegree, 6).main.arity() == 5);
        CHECK(build_params(ParamFamily::OddDegree, 5).reduced.arity() == 4);
    }

    TEST_CASE("parsing and canonical form") {
        auto s = spec("5/6, -1/2,7/6", "3/4,0,1/4");
        CHECK(canonicalize(s).str() == "[1/6, 1/2, 5/6; 0, 1/4, 3/4]");
        CHECK_THROWS_AS(parse_rational_list("1/0"), Error);
        CHECK_THROWS_AS(parse_rational_list("a"), Error);
    }

    TEST_CASE("value at 1 over F_5 is phi(3) = -1") {
        auto f = FieldDesc::build(5, 1);
        auto s = spec("0,1/2", "1/6,5/6");
        GContext ctx(f, PreparedG::digits_needed(f, s, 4));
        GValue g = eval_G(ctx, s, f.one(), 4);
        CHECK(g.guaranteed_precision >= 4);
        CHECK(ctx.ring().equal_mod(g.value, ctx.ring().from_int(-1, 4), 4));
        CHECK(ctx.ring().str(ctx.ring().truncate(g.value, 4)) == "5^0 * [624] (mod 5^4)");
    }

    TEST_CASE("three-term value at 1 over F_5 vanishes") {
        auto f = FieldDesc::build(5, 1);
        auto s = spec("1/6,1/2,5/6", "0,1/4,3/4");
        GContext ctx(f, PreparedG::digits_needed(f, s, 4));
        CHECK(ctx.ring().equal_mod(eval_G(ctx, s, f.one(), 4).value, ctx.ring().zero(4), 4));
    }

    TEST_CASE("agrees with the direct r = 1 evaluation") {
        const std::vector<GSpec> specs = {spec("0,1/2", "1/6,5/6"),       spec("1/4,3/4", "1/3,2/3"),
                                          spec("1/4,3/4", "1/6,5/6"),     spec("1/2,1/2", "1/3,2/3"),
                                          spec("1/6,1/2,5/6", "0,1/4,3/4"), spec("1/3,2/3", "1/4,3/4"),
                                          spec("2/7", "1/3")};
        for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
            auto f = FieldDesc::build(p, 1);
            const int n = 3;
            for (const auto& s : specs) {
                bool integral = true;
                for (const auto* list : {&s.upper, &s.lower})
                    for (const auto& a : *list) integral = integral && a.den() % p != 0;
                if (!integral) continue;
                CAPTURE(p);
                CAPTURE(s.str());
                GContext ctx(f, PreparedG::digits_needed(f, s, n));
                PreparedG prepared(ctx, s, n);
                const int e = prepared.min_exponent();
                const int k = n - e;
                for (std::uint32_t t = 1; t < p; ++t) {
                    auto ref = oracle::hypergeometric_r1(p, to_fracs(s.upper), to_fracs(s.lower), t, k);
                    REQUIRE(ref.exponent == e);
                    REQUIRE(scaled_residue(prepared.eval({t}).value, p, e, k) == ref.scaled % oracle::powm(p, k, ~0ULL));
                }
            }
        }
    }

    TEST_CASE("value at zero is zero") {
        auto f = FieldDesc::build(7, 1);
        auto s = spec("0,1/2", "1/6,5/6");
        GContext ctx(f, 6);
        CHECK(eval_G(ctx, s, f.zero(), 4).value.is_zero());
    }

    TEST_CASE("permuting parameters and integer shifts leave values unchanged") {
        auto f = FieldDesc::build(5, 2);
        auto base = spec("1/6,1/2,5/6", "0,1/4,3/4");
        GContext ctx(f, 8);
        const Qq& ring = ctx.ring();
        PreparedG g0(ctx, base, 4);
        Lcg rng(21);
        for (int trial = 0; trial < 6; ++trial) {
            GSpec s = base;
            for (std::size_t i = s.arity(); i > 1; --i) {
                std::swap(s.upper[i - 1], s.upper[rng.next() % i]);
                std::swap(s.lower[i - 1], s.lower[rng.next() % i]);
            }
            for (auto& a : s.upper) a += Rational(static_cast<i64>(rng.next() % 5) - 2);
            for (auto& b : s.lower) b += Rational(static_cast<i64>(rng.next() % 5) - 2);
            PreparedG g1(ctx, s, 4);
            for (std::uint32_t t = 1; t < f.q(); ++t) {
                REQUIRE(ring.str(ring.truncate(g0.eval({t}).value, 4)) == ring.str(ring.truncate(g1.eval({t}).value, 4)));
            }
        }
    }

    TEST_CASE("summand valuations stay above -n r") {
        for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 1}, {7, 1}, {5, 2}, {7, 2}, {13, 2}}) {
            auto f = FieldDesc::build(p, r);
            for (int d : {3, 4, 5}) {
                if (d % p == 0 || (d - 1) % p == 0) continue;
                auto pp = build_params(d % 2 ? ParamFamily::OddDegree : ParamFamily::EvenDegree, d);
                for (const auto& s : {pp.main, pp.reduced})
                    CHECK(PreparedG::min_exponent(f, s) >= -static_cast<int>(s.arity() * r));
            }
        }
    }

    TEST_CASE("model independence on the prime subfield of F_25") {
        auto a = FieldDesc::build(5, 2), b = FieldDesc::build_nth(5, 2, 1);
        auto s = spec("0,1/2", "1/6,5/6");
        const int digits = PreparedG::digits_needed(a, s, 4);
        GContext ca(a, digits), cb(b, digits);
        for (i64 c = 1; c < 5; ++c) {
            auto va = eval_G(ca, s, a.from_int(c), 4).value;
            auto vb = eval_G(cb, s, b.from_int(c), 4).value;
            CHECK(ca.ring().str(ca.ring().truncate(va, 4)) == cb.ring().str(cb.ring().truncate(vb, 4)));
        }
    }

    TEST_CASE("insufficient working precision is reported") {
        auto f = FieldDesc::build(5, 2);
        auto s = spec("0,1/2", "1/6,5/6");
        GContext ctx(f, 2);
        try {
            PreparedG g(ctx, s, 6);
            FAIL("expected an error");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::PrecisionExhausted);
        }
    }

    TEST_CASE("inadmissible degrees") {
        CHECK_THROWS_AS(require_admissible_degree(5, 5), Error);
        CHECK_THROWS_AS(require_admissible_degree(5, 6), Error);
        CHECK_NOTHROW(require_admissible_degree(5, 4));
    }
}

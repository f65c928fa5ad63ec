#include <doctest.h>

#include <set>

#include <json.hpp>

#include "ffhyper/error.hpp"
#include "ffhyper/harness.hpp"

using namespace ffhyper;

namespace {

SuiteConfig config(Suite s, std::uint32_t p, std::uint32_t r = 1) {
    SuiteConfig c;
    c.suite = s;
    c.p = p;
    c.r = r;
    return c;
}

}  // namespace

TEST_SUITE("harness") {
    TEST_CASE("suite names round-trip") {
        for (Suite s : all_suites()) CHECK(parse_suite(suite_name(s)) == s);
        CHECK_FALSE(parse_suite("nope").has_value());
        CHECK(all_suites().size() == 11);
    }

    TEST_CASE("grid parsing") {
        CHECK(Grid::parse("exhaustive").exhaustive);
        CHECK(Grid::parse("sample:30").samples == 30u);
        CHECK(Grid::parse("sample:30").str() == "sample:30");
        CHECK_THROWS_AS(Grid::parse("sample:0"), Error);
        CHECK_THROWS_AS(Grid::parse("sample:"), Error);
        CHECK_THROWS_AS(Grid::parse("all"), Error);
    }

    TEST_CASE("generator sequence") {
        Lcg rng(1);
        // first state 1 * 6364136223846793005 + 1442695040888963407 = 7806831264735756412
        CHECK(rng.next() == (7806831264735756412ULL >> 33));
        unsigned __int128 state = 7806831264735756412ULL;
        for (int i = 0; i < 10; ++i) {
            state = (state * 6364136223846793005ULL + 1442695040888963407ULL) % ((unsigned __int128)1 << 64);
            CHECK(rng.next() == static_cast<u64>(state) >> 33);
        }
    }

    TEST_CASE("pair grids") {
        auto f = FieldDesc::build(5, 2);
        CHECK(pair_grid(f, Grid{}, 1, 13).size() == 50);
        CHECK(pair_grid(f, Grid::parse("exhaustive"), 1, 13).size() == 576);
        auto s1 = pair_grid(f, Grid::parse("sample:40"), 9, 13);
        auto s2 = pair_grid(f, Grid::parse("sample:40"), 9, 13);
        auto s3 = pair_grid(f, Grid::parse("sample:40"), 10, 13);
        CHECK(s1 == s2);
        CHECK(s1 != s3);
        std::set<std::pair<std::uint32_t, std::uint32_t>> distinct;
        for (auto [a, b] : s1) {
            CHECK_FALSE(a.is_zero());
            CHECK_FALSE(b.is_zero());
            distinct.insert({a.code, b.code});
        }
        CHECK(distinct.size() == 40);
        auto g = FieldDesc::build(7, 1);
        CHECK(pair_grid(g, Grid{}, 1, 13).size() == 36);
    }

    TEST_CASE("floors suite for p = 5, d = 4") {
        auto c = config(Suite::Floors, 5);
        c.degrees = {4};
        Report rep = run_suite(c);
        CHECK(rep.passed == 2);
        CHECK(rep.failed == 0);
    }

    TEST_CASE("gross-koblitz suite for p = 5") {
        Report rep = run_suite(config(Suite::GrossKoblitz, 5));
        CHECK(rep.passed == 4);
        CHECK(rep.failed == 0);
    }

    TEST_CASE("every suite passes on small fields") {
        for (Suite s : all_suites())
            for (auto [p, r] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{5, 1}, {7, 1}, {3, 2}}) {
                CAPTURE(suite_name(s));
                CAPTURE(p);
                Report rep = run_suite(config(s, p, r));
                CHECK(rep.failed == 0);
            }
    }

    TEST_CASE("transformation suite skips z = 1 with a reason") {
        Report rep = run_suite(config(Suite::Transform2G2, 7));
        bool found = false;
        for (const auto& s : rep.skipped) found = found || s.reason == "z = 1 excluded";
        CHECK(found);
        CHECK(rep.failed == 0);
        Report small = run_suite(config(Suite::Transform2G2, 3));
        CHECK(small.cases.empty());
        CHECK(small.skipped.size() == 1);
    }

    TEST_CASE("reports are valid, deterministic JSON") {
        auto c = config(Suite::Counts, 5, 2);
        c.grid = Grid::parse("sample:7");
        c.seed = 42;
        Report a = run_suite(c), b = run_suite(c);
        CHECK(a.to_json(false) == b.to_json(false));
        auto j = nlohmann::json::parse(a.to_json());
        CHECK(j["schemaVersion"] == 1);
        CHECK(j["header"]["q"] == 25);
        CHECK(j["header"]["seed"] == 42);
        CHECK(j["header"]["modulus"] == nlohmann::json::array({2, 0, 1}));
        CHECK(j["header"]["generator"] == nlohmann::json::array({1, 1}));
        CHECK(j["cases"].size() == j["passed"].get<int>() + j["failed"].get<int>());
        CHECK(j.contains("wallMillis"));
        for (const auto& k : {"params", "lhsText", "rhsText", "equal"}) CHECK(j["cases"][0].contains(k));
    }

    TEST_CASE("configuration errors") {
        auto c = config(Suite::SumEven, 5);
        c.degrees = {3};
        CHECK_THROWS_AS(run_suite(c), Error);
        CHECK_THROWS_AS(run_suite(config(Suite::Floors, 4)), Error);
        auto d = config(Suite::Counts, 5);
        d.precision = 0;
        CHECK_THROWS_AS(run_suite(d), Error);
    }

    TEST_CASE("a failing case is reported as a failure") {
        Report rep;
        rep.add("g", {{{"x", i64{1}}}, "1", "2", false});
        rep.add("g", {{{"x", i64{2}}}, "2", "2", true});
        CHECK_FALSE(rep.ok());
        CHECK(rep.failed == 1);
        CHECK(rep.tallies["g"] == std::pair<u64, u64>{1, 1});
    }
}

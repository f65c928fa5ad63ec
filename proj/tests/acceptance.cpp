// Runs acceptance criteria 1-11 and prints one line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ffhyper/counts.hpp"
#include "ffhyper/gammap.hpp"
#include "ffhyper/gfun.hpp"
#include "ffhyper/harness.hpp"

using namespace ffhyper;

namespace {

struct FieldSize {
    std::uint32_t p, r;
};

struct Outcome {
    bool ok = true;
    std::string detail;
    u64 cases = 0;
    u64 failed = 0;
};

Report run(Suite s, FieldSize f, int prec = 4, std::vector<int> degrees = {}, std::string grid = "") {
    SuiteConfig c;
    c.suite = s;
    c.p = f.p;
    c.r = f.r;
    c.precision = prec;
    c.degrees = std::move(degrees);
    if (!grid.empty()) c.grid = Grid::parse(grid);
    return run_suite(c);
}

void absorb(Outcome& o, const Report& rep) {
    o.cases += rep.passed + rep.failed;
    o.failed += rep.failed;
    if (rep.failed) o.ok = false;
}

void require(Outcome& o, bool cond, const std::string& what) {
    if (cond) return;
    o.ok = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
}

u64 tally(const Report& rep, const std::string& group) {
    auto it = rep.tallies.find(group);
    return it == rep.tallies.end() ? 0 : it->second.first + it->second.second;
}

bool all_skips_have(const Report& rep, const std::string& reason) {
    for (const auto& s : rep.skipped)
        if (s.reason != reason) return false;
    return true;
}

const std::vector<FieldSize> kSmall = {{5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}};
const std::vector<FieldSize> kLarge = {{5, 2}, {7, 2}, {11, 2}, {13, 2}};

Outcome gamma_functional_equation() {
    Outcome o;
    for (u64 p : {3u, 5u, 7u}) {
        auto start = std::chrono::steady_clock::now();
        GammaTable table(p, 4);
        auto cases = check_functional_equation(table);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.cases += cases.size();
        for (const auto& c : cases) o.failed += !c.equal;
        require(o, cases.size() == table.modulus(), "not exhaustive for p = " + std::to_string(p));
        require(o, secs < 5, "p = " + std::to_string(p) + " took longer than 5 s");
    }
    require(o, o.failed == 0, "failures");
    return o;
}

Outcome floors() {
    Outcome o;
    const std::vector<FieldSize> fields = {{5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {5, 2}, {7, 2}, {11, 2}, {13, 2}};
    for (auto f : fields) absorb(o, run(Suite::Floors, f));
    auto hand = check_floor_lemma(5, 1, 4, FloorLemma::Even);
    require(o, !hand.empty() && hand[0].lhs == "1" && hand[0].rhs == "1", "hand-derived case d=4, q=5, m=1 differs");
    return o;
}

Outcome gamma_products() {
    Outcome o;
    for (auto f : std::vector<FieldSize>{{5, 1}, {7, 1}, {3, 2}, {5, 2}, {7, 2}}) {
        Report rep = run(Suite::GammaLemmas, f);
        u64 q = rep.q;
        // part one for 0 < m <= q-2, part two for m != (q-1)/2 in [0, q-2]
        require(o, tally(rep, "reflection-products") == (q - 2) + (q - 2), "reflection cases missing for q = " + std::to_string(q));
        absorb(o, rep);
    }
    return o;
}

Outcome closed_forms(Suite suite) {
    Outcome o;
    for (auto f : kSmall) {
        Report rep = run(suite, f);
        u64 admissible = 0;
        for (int d : {3, 4, 5}) admissible += (d % f.p != 0 && (d - 1) % f.p != 0);
        require(o, rep.passed + rep.failed == 2 * admissible * (rep.q - 1) * (rep.q - 1), "grid not exhaustive for q = " + std::to_string(rep.q));
        absorb(o, rep);
    }
    for (auto f : kLarge) {
        Report rep = run(suite, f);
        u64 admissible = 0;
        for (int d : {3, 4, 5}) admissible += (d % f.p != 0 && (d - 1) % f.p != 0);
        require(o, rep.passed + rep.failed >= 2 * admissible * 50, "fewer than 50 pairs for q = " + std::to_string(rep.q));
        absorb(o, rep);
    }
    if (suite == Suite::Counts) {
        auto f5 = FieldDesc::build(5, 1);
        require(o, count_curve_points(f5, {3, f5.one(), f5.one(), CurveShape::Linear}) == 8, "N3(F5, 1, 1) != 8");
        require(o, count_curve_points(f5, {4, f5.one(), f5.one(), CurveShape::Linear}) == 7, "N4(F5, 1, 1) != 7");
    }
    return o;
}

const std::vector<FieldSize> kSumFields = {{5, 1}, {7, 1}, {11, 1}, {13, 1}, {5, 2}};

Outcome sums() {
    Outcome o;
    for (auto f : kSumFields) {
        Report even = run(Suite::SumEven, f, 4, {4});
        Report odd = run(Suite::SumOdd, f, 4, {3, 5});
        for (const auto* rep : {&even, &odd}) {
            u64 pairs = rep->q <= 13 ? (rep->q - 1) * (rep->q - 1) : 30;
            u64 admissible = 0;
            for (int d : rep == &even ? std::vector<int>{4} : std::vector<int>{3, 5}) admissible += (d % f.p != 0 && (d - 1) % f.p != 0);
            require(o, rep->passed + rep->failed >= 2 * admissible * pairs, "grid too small for q = " + std::to_string(rep->q));
            absorb(o, *rep);
        }
    }
    return o;
}

Outcome transformation() {
    Outcome o;
    u64 skipped = 0;
    for (auto f : kSumFields) {
        Report rep = run(Suite::Transform2G2, f);
        require(o, all_skips_have(rep, "z = 1 excluded"), "unexpected skip for q = " + std::to_string(rep.q));
        require(o, tally(rep, "transformation") > 0 && tally(rep, "corollary") > 0, "no cases for q = " + std::to_string(rep.q));
        skipped += rep.skipped.size();
        absorb(o, rep);
    }
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(skipped) + " z = 1 cases skipped";
    return o;
}

Outcome specials() {
    Outcome o;
    const std::vector<FieldSize> fields = {{5, 1}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {5, 2}, {7, 2}};
    for (auto f : fields) {
        Report rep = run(Suite::Specials, f);
        u64 q = rep.q;
        require(o, tally(rep, "example-phi3") == 1 && tally(rep, "three-term") == 1, "examples missing for q = " + std::to_string(q));
        if (f.p > 7 && f.p != 23) require(o, tally(rep, "four-term") == 1, "four-term relation missing for q = " + std::to_string(q));
        if (f.p > 7) require(o, tally(rep, "example-243/343") == 1, "243/343 example missing");
        if (f.p > 13) require(o, tally(rep, "example-972/2197") == 1, "972/2197 example missing");
        // every triple is enumerated once per pair (a, b)
        require(o, rep.grid == "default" && q <= 49, "triples not exhaustive");
        absorb(o, rep);
    }
    auto f5 = FieldDesc::build(5, 1);
    GSpec spec{parse_rational_list("0,1/2"), parse_rational_list("1/6,5/6")};
    GContext ctx(f5, PreparedG::digits_needed(f5, spec, 4));
    require(o, ctx.ring().equal_mod(eval_G(ctx, spec, f5.one(), 4).value, ctx.ring().from_int(-1, 4), 4), "value at q = 5 is not -1");
    return o;
}

Outcome gauss_complex() {
    Outcome o;
    for (std::uint32_t p = 3; p <= 169; p += 2) {
        bool prime = true;
        for (std::uint32_t k = 3; k * k <= p; k += 2) prime = prime && p % k;
        if (!prime) continue;
        for (std::uint32_t r = 1, q = p; q <= 169; ++r, q *= p) {
            Report rep = run(Suite::GaussComplex, {p, r});
            require(o, tally(rep, "magnitude") == q - 2, "magnitude cases missing for q = " + std::to_string(q));
            absorb(o, rep);
        }
    }
    return o;
}

Outcome gross_koblitz() {
    Outcome o;
    for (auto f : std::vector<FieldSize>{{5, 1}, {7, 1}, {3, 2}, {5, 2}}) {
        SuiteConfig c;
        c.suite = Suite::GrossKoblitz;
        c.p = f.p;
        c.r = f.r;
        c.pi_precision = 12;
        Report rep = run_suite(c);
        require(o, rep.passed + rep.failed == rep.q - 1, "not every a checked for q = " + std::to_string(rep.q));
        absorb(o, rep);
    }
    return o;
}

Outcome properties() {
    Outcome o;
    for (auto f : std::vector<FieldSize>{{5, 2}, {5, 1}, {7, 1}, {3, 2}, {13, 1}}) {
        Report rep = run(Suite::GfunProps, f);
        for (const char* g : {"reorder", "fractional-shift", "valuation-bound", "model-independence"})
            require(o, tally(rep, g) > 0, std::string("no ") + g + " cases for q = " + std::to_string(rep.q));
        absorb(o, rep);
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "gamma functional equation, p in {3,5,7}, N=4", 15, gamma_functional_equation},
        {2, "floor identities, q up to 169, d in 3..7", 60, floors},
        {3, "gamma reflection products, q in {5,7,9,25,49}", 0, gamma_products},
        {4, "point counts vs brute force", 300, [] { return closed_forms(Suite::Counts); }},
        {5, "root counts vs brute force", 0, [] { return closed_forms(Suite::Roots); }},
        {6, "summation identities, N=4", 600, sums},
        {7, "quadratic transformation and corollary", 0, transformation},
        {8, "special values", 0, specials},
        {9, "complex Gauss sum lemmas, q up to 169, tol 1e-8", 0, gauss_complex},
        {10, "Gross-Koblitz mod pi^12, q in {5,7,9,25}", 120, gross_koblitz},
        {11, "hypergeometric invariants", 0, properties},
    };
    bool all = true;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds) {
            o.ok = false;
            o.detail += (o.detail.empty() ? "" : "; ") + std::string("over time limit");
        }
        all = all && o.ok;
        std::printf("criterion %2d %s: %s (%llu cases, %llu failed, %.2f s)%s%s\n", c.id, o.ok ? "PASS" : "FAIL", c.name,
                    static_cast<unsigned long long>(o.cases), static_cast<unsigned long long>(o.failed), secs,
                    o.detail.empty() ? "" : " ", o.detail.c_str());
    }
    return all ? 0 : 1;
}

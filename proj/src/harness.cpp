#include "ffhyper/harness.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include <json.hpp>

#include "ffhyper/counts.hpp"
#include "ffhyper/error.hpp"
#include "ffhyper/gammap.hpp"
#include "ffhyper/gauss.hpp"
#include "ffhyper/gfun.hpp"

namespace ffhyper {

namespace {

using Params = std::vector<std::pair<std::string, ParamValue>>;

struct SuiteEntry {
    Suite suite;
    const char* name;
};

constexpr SuiteEntry kSuites[] = {
    {Suite::Floors, "floors"},
    {Suite::GammaLemmas, "gamma-lemmas"},
    {Suite::GfunProps, "gfun-props"},
    {Suite::SumEven, "sum-even"},
    {Suite::SumOdd, "sum-odd"},
    {Suite::Transform2G2, "transform-2g2"},
    {Suite::Counts, "counts"},
    {Suite::Roots, "roots"},
    {Suite::Specials, "specials"},
    {Suite::GaussComplex, "gauss-complex"},
    {Suite::GrossKoblitz, "gross-koblitz"},
};

std::string group_of(const CheckCase& c) {
    if (!c.params.empty())
        if (const auto* s = std::get_if<std::string>(&c.params.front().second)) return *s;
    return "cases";
}

bool admissible(u64 p, int d) { return static_cast<u64>(d) % p != 0 && static_cast<u64>(d - 1) % p != 0; }

std::vector<int> degrees_or(const SuiteConfig& cfg, std::vector<int> defaults) {
    return cfg.degrees.empty() ? defaults : cfg.degrees;
}

// Values of one or more specs at every argument, computed on first use.
class GCache {
public:
    GCache(const GContext& ctx, int n_req) : ctx_(&ctx), n_req_(n_req) {}

    const QqNum& at(const GSpec& spec, FqElem t) {
        auto key = spec.str();
        auto it = entries_.find(key);
        if (it == entries_.end()) {
            Entry e{PreparedG(*ctx_, spec, n_req_), std::vector<std::optional<QqNum>>(ctx_->field().q())};
            it = entries_.emplace(key, std::move(e)).first;
        }
        auto& slot = it->second.values[t.code];
        if (!slot) slot = it->second.prepared.eval(t).value;
        return *slot;
    }

private:
    struct Entry {
        PreparedG prepared;
        std::vector<std::optional<QqNum>> values;
    };
    const GContext* ctx_;
    int n_req_;
    std::map<std::string, Entry> entries_;
};

int digits_for(const FieldDesc& field, const std::vector<GSpec>& specs, int n_req) {
    int digits = 1;
    for (const auto& s : specs) digits = std::max(digits, PreparedG::digits_needed(field, s, n_req));
    return digits;
}

// Compares two values at absolute precision n and records both sides canonically.
class Comparator {
public:
    Comparator(const Qq& ring, int n) : ring_(&ring), n_(n) {
        exact_ = std::max(n, std::min(n + 16 * static_cast<int>(ring.r()), ring.max_precision() - 2 * static_cast<int>(ring.r())));
    }

    QqNum exact(i64 c) const { return ring_->from_int(c, exact_); }

    CheckCase compare(Params params, const QqNum& lhs, const QqNum& rhs) const {
        bool eq = ring_->equal_mod(lhs, rhs, n_);
        return {std::move(params), ring_->str(ring_->truncate(lhs, n_)), ring_->str(ring_->truncate(rhs, n_)), eq};
    }

    const Qq& ring() const { return *ring_; }

private:
    const Qq* ring_;
    int n_;
    int exact_;
};

std::string elem(const FieldDesc& field, FqElem x) { return field.str(x); }

void run_floors(const SuiteConfig& cfg, const FieldDesc& field, Report& report) {
    for (int d : degrees_or(cfg, {3, 4, 5, 6, 7})) {
        if (d < 3) throw Error(ErrorKind::UnsupportedConfig, "floor identities need d >= 3");
        if (!admissible(field.p(), d)) {
            report.skip({{"d", d}}, "p divides d(d-1)");
            continue;
        }
        std::vector<FloorLemma> lemmas;
        if (d % 2 == 0)
            lemmas = {FloorLemma::Even};
        else
            lemmas = {FloorLemma::Odd, FloorLemma::OddDoubled};
        for (auto lemma : lemmas) report.add_all(floor_lemma_name(lemma), check_floor_lemma(field.p(), field.r(), d, lemma));
    }
}

void run_gamma_lemmas(const SuiteConfig& cfg, const FieldDesc& field, Report& report) {
    const int n = cfg.precision;
    GammaTable table(field.p(), n);
    Qq ring(field);
    TeichmullerTable teich(ring, n);
    report.n_work = n;
    report.add_all("functional-equation", check_functional_equation(table));

    auto degrees = degrees_or(cfg, {3, 4, 5});
    std::set<i64> multipliers{2}, shifts{2, 3, 4};
    for (int d : degrees) {
        multipliers.insert(d);
        multipliers.insert(d - 1);
        shifts.insert(d);
        shifts.insert(d - 1);
    }
    for (i64 m : multipliers) {
        if (m < 1) continue;
        if (m % field.p() == 0) {
            report.skip({{"identity", "product-formula"}, {"m", m}}, "p divides the multiplier");
            continue;
        }
        report.add_all("product-formula", check_product_formula(teich, table, m));
    }
    for (i64 t : shifts) {
        if (t < 1) continue;
        if (t % field.p() == 0) {
            report.skip({{"identity", "shifted-products"}, {"t", t}}, "p divides the multiplier");
            continue;
        }
        report.add_all("shifted-products", check_shifted_products(teich, table, t));
    }
    report.add_all("reflection-products", check_reflection_products(teich, table));
}

struct NamedSpec {
    std::string name;
    GSpec spec;
};

std::vector<NamedSpec> property_specs(const SuiteConfig& cfg, const FieldDesc& field, Report& report) {
    std::vector<NamedSpec> out;
    auto push = [&](const std::string& name, GSpec spec) {
        for (const auto* list : {&spec.upper, &spec.lower})
            for (const auto& a : *list)
                if (a.den() % static_cast<i64>(field.p()) == 0) {
                    report.skip({{"spec", name}}, "parameters not p-integral");
                    return;
                }
        for (const auto& e : out)
            if (e.spec == spec) return;
        out.push_back({name, std::move(spec)});
    };
    for (int d : degrees_or(cfg, {3, 4, 5})) {
        if (!admissible(field.p(), d)) {
            report.skip({{"d", d}}, "p divides d(d-1)");
            continue;
        }
        std::string ds = std::to_string(d);
        if (d % 2 == 0 && d >= 4) {
            auto pp = build_params(ParamFamily::EvenDegree, d);
            push("even-root-d" + ds, pp.main);
            push("even-points-d" + ds, pp.reduced);
        } else if (d % 2 == 1 && d >= 3) {
            auto pp = build_params(ParamFamily::OddDegree, d);
            push("odd-root-d" + ds, pp.main);
            push("odd-points-d" + ds, pp.reduced);
            push("odd-primed-points-d" + ds, build_params(ParamFamily::OddDegreePrimed, d).reduced);
        }
    }
    push("quarter-third", {{{1, 4}, {3, 4}}, {{1, 3}, {2, 3}}});
    push("quarter-sixth", {{{1, 4}, {3, 4}}, {{1, 6}, {5, 6}}});
    push("half-sixth", {{{0}, {1, 2}}, {{1, 6}, {5, 6}}});
    push("sixth-quarter", {{{1, 6}, {1, 2}, {5, 6}}, {{0}, {1, 4}, {3, 4}}});
    push("quarter-tenth", {{{0}, {1, 4}, {1, 2}, {3, 4}}, {{1, 10}, {3, 10}, {7, 10}, {9, 10}}});
    return out;
}

void run_gfun_props(const SuiteConfig& cfg, const FieldDesc& field, Report& report) {
    const int n = cfg.precision;
    auto specs = property_specs(cfg, field, report);
    std::vector<GSpec> all;
    for (const auto& s : specs) {
        GSpec rev = s.spec;
        std::reverse(rev.upper.begin(), rev.upper.end());
        std::rotate(rev.lower.begin(), rev.lower.begin() + 1, rev.lower.end());
        GSpec shifted = s.spec;
        for (std::size_t i = 0; i < shifted.upper.size(); ++i) {
            shifted.upper[i] += Rational(static_cast<i64>(i) + 1);
            shifted.lower[i] -= Rational(2);
        }
        all.push_back(s.spec);
        all.push_back(rev);
        all.push_back(shifted);
        all.push_back(canonicalize(s.spec));
    }
    const int digits = digits_for(field, all, n);
    report.n_work = digits;
    GContext ctx(field, digits);
    Comparator cmp(ctx.ring(), n);
    GCache cache(ctx, n);

    FieldDesc other = FieldDesc::build_nth(field.p(), field.r(), 1);
    GContext other_ctx(other, digits);
    GCache other_cache(other_ctx, n);
    const Qq& ring = ctx.ring();
    const Qq& other_ring = other_ctx.ring();
    std::string other_modulus = "[";
    for (std::size_t i = 0; i < other.modulus().size(); ++i)
        other_modulus += (i ? ", " : "") + std::to_string(other.modulus()[i]);
    other_modulus += "]";

    const int bound = -static_cast<int>(field.r());
    for (std::size_t k = 0; k < specs.size(); ++k) {
        const auto& name = specs[k].name;
        const GSpec& spec = all[4 * k];
        const int arity_bound = bound * static_cast<int>(spec.arity());
        int e_min = PreparedG::min_exponent(field, spec);
        report.add("valuation-bound", {{{"identity", "valuation-bound"}, {"spec", name}, {"quantity", "summand exponent"}},
                                       std::to_string(e_min),
                                       ">= " + std::to_string(arity_bound),
                                       e_min >= arity_bound});
        int v_min = 0;
        bool any = false;
        for (std::uint32_t code = 1; code < field.q(); ++code) {
            const QqNum& v = cache.at(spec, FqElem{code});
            if (v.is_zero()) continue;
            v_min = any ? std::min(v_min, v.valuation) : v.valuation;
            any = true;
        }
        report.add("valuation-bound", {{{"identity", "valuation-bound"}, {"spec", name}, {"quantity", "value valuation"}},
                                       any ? std::to_string(v_min) : "none",
                                       ">= " + std::to_string(arity_bound),
                                       !any || v_min >= arity_bound});

        for (std::uint32_t code = 1; code < field.q(); ++code) {
            FqElem t{code};
            const QqNum& base = cache.at(spec, t);
            const char* names[] = {"reorder", "fractional-shift", "canonical-form"};
            for (int variant = 1; variant <= 3; ++variant) {
                Params params{{"identity", names[variant - 1]}, {"spec", name}, {"t", elem(field, t)}};
                report.add(names[variant - 1], cmp.compare(std::move(params), base, cache.at(all[4 * k + variant], t)));
            }
        }
        for (std::uint32_t c = 1; c < field.p(); ++c) {
            const QqNum& mine = cache.at(spec, field.from_int(c));
            const QqNum& theirs = other_cache.at(spec, other.from_int(c));
            std::string lhs = ring.str(ring.truncate(mine, n));
            std::string rhs = other_ring.str(other_ring.truncate(theirs, n));
            report.add("model-independence",
                       {{{"identity", "model-independence"}, {"spec", name}, {"t", static_cast<i64>(c)},
                         {"other modulus", other_modulus}},
                        lhs, rhs, lhs == rhs});
        }
    }
}

void run_sums(const SuiteConfig& cfg, const FieldDesc& field, Report& report, bool even) {
    const int n = cfg.precision;
    const u64 q = field.q();
    auto degrees = degrees_or(cfg, even ? std::vector<int>{4} : std::vector<int>{3, 5});
    struct Plan {
        int d;
        GSpec root, left, right;  // right: spec of the g-identity reduced value
    };
    std::vector<Plan> plans;
    std::vector<GSpec> specs;
    for (int d : degrees) {
        if (even && (d < 4 || d % 2 != 0)) throw Error(ErrorKind::UnsupportedConfig, "sum-even needs even d >= 4");
        if (!even && (d < 3 || d % 2 != 1)) throw Error(ErrorKind::UnsupportedConfig, "sum-odd needs odd d >= 3");
        if (!admissible(field.p(), d)) {
            report.skip({{"d", d}}, "p divides d(d-1)");
            continue;
        }
        Plan plan{d, {}, {}, {}};
        if (even) {
            auto pp = build_params(ParamFamily::EvenDegree, d);
            plan.root = pp.main;
            plan.left = plan.right = pp.reduced;
        } else {
            auto pp = build_params(ParamFamily::OddDegree, d);
            plan.root = pp.main;
            plan.left = pp.reduced;
            plan.right = build_params(ParamFamily::OddDegreePrimed, d).reduced;
        }
        specs.insert(specs.end(), {plan.root, plan.left, plan.right});
        plans.push_back(plan);
    }
    if (plans.empty()) return;
    const int digits = digits_for(field, specs, n);
    report.n_work = digits;
    GContext ctx(field, digits);
    const Qq& ring = ctx.ring();
    Comparator cmp(ring, n);
    GCache cache(ctx, n);
    const auto pairs = pair_grid(field, cfg.grid, cfg.seed, 13);
    const QqNum qq = cmp.exact(static_cast<i64>(q));

    for (const auto& plan : plans) {
        const int d = plan.d;
        for (auto [a, b] : pairs) {
            const bool square = quad_char(field, b) == 1;
            std::vector<FqElem> roots;
            for (std::uint32_t c = 0; c < q; ++c)
                if (field.square(FqElem{c}) == b) roots.push_back(FqElem{c});
            QqNum sf = ring.zero(n + 8), sg = ring.zero(n + 8);
            for (std::uint32_t c = 0; c < q; ++c) {
                FqElem y{c};
                if (std::find(roots.begin(), roots.end(), y) != roots.end()) continue;
                int chi = quad_char(field, field.sub(field.square(y), b));
                FqElem tf = linear_argument(field, d, a, b, y), tg = subleading_argument(field, d, a, b, y);
                if (!even) {
                    tf = field.neg(tf);
                    tg = field.neg(tg);
                }
                QqNum gf = cache.at(plan.root, tf);
                if (even) gf = ring.mul(cmp.exact(chi), gf);
                sf = ring.add(sf, gf);
                sg = ring.add(sg, ring.mul(cmp.exact(chi), cache.at(plan.root, tg)));
            }
            FqElem f0 = linear_argument(field, d, a, b, field.zero()), g0 = subleading_argument(field, d, a, b, field.zero());
            if (!even) {
                f0 = field.neg(f0);
                g0 = field.neg(g0);
            }
            QqNum qgf = ring.mul(qq, cache.at(plan.left, f0));
            QqNum qgg = ring.mul(qq, cache.at(plan.right, g0));

            QqNum lf, rf, lg, rg;
            if (even) {
                if (!square) {
                    lf = sf;
                    rf = ring.sub(cmp.exact(-1), qgf);
                    lg = sg;
                    rg = ring.add(cmp.exact(-1), qgg);
                } else {
                    i64 s = static_cast<i64>(count_power_solutions(field, d - 1, field.neg(a)));
                    lf = ring.add(cmp.exact(1 + 2 * s), sf);
                    rf = ring.neg(qgf);
                    lg = ring.add(cmp.exact(3), sg);
                    rg = ring.neg(qgg);
                }
            } else {
                int phi_a = quad_char(field, a);
                if (!square) {
                    lf = sf;
                    rf = qgf;
                    lg = ring.mul(cmp.exact(phi_a), sg);
                    rg = qgg;
                } else {
                    i64 s = static_cast<i64>(count_power_solutions(field, d - 1, field.neg(a)));
                    lf = sf;
                    rf = ring.sub(cmp.exact(-2 * quad_char(field, field.neg(a)) * s), qgf);
                    lg = ring.sub(cmp.exact(-2), ring.mul(cmp.exact(phi_a), sg));
                    rg = qgg;
                }
            }
            const char* cls = square ? "square" : "non-square";
            report.add(std::string(cls) + "/f",
                       cmp.compare({{"identity", "f-argument"}, {"d", d}, {"a", elem(field, a)}, {"b", elem(field, b)}, {"b class", cls}}, lf, rf));
            report.add(std::string(cls) + "/g",
                       cmp.compare({{"identity", "g-argument"}, {"d", d}, {"a", elem(field, a)}, {"b", elem(field, b)}, {"b class", cls}}, lg, rg));
        }
    }
}

void run_transform(const SuiteConfig& cfg, const FieldDesc& field, Report& report) {
    if (field.p() <= 3) {
        report.skip({{"p", static_cast<i64>(field.p())}}, "requires p > 3");
        return;
    }
    const int n = cfg.precision;
    const GSpec left{{{1, 4}, {3, 4}}, {{1, 3}, {2, 3}}};
    const GSpec right{{{1, 4}, {3, 4}}, {{1, 6}, {5, 6}}};
    const int digits = digits_for(field, {left, right}, n);
    report.n_work = digits;
    GContext ctx(field, digits);
    const Qq& ring = ctx.ring();
    Comparator cmp(ring, n);
    GCache cache(ctx, n);
    const FqElem c27 = field.from_int(27), c4 = field.from_int(4);
    for (auto [a, b] : pair_grid(field, cfg.grid, cfg.seed, 13)) {
        FqElem b2 = field.square(b);
        FqElem z = field.neg(field.div(field.mul(c27, b2), field.mul(c4, field.pow(a, 3))));
        Params params{{"identity", "transformation"}, {"a", elem(field, a)}, {"b", elem(field, b)}, {"z", elem(field, z)}};
        if (z == field.one()) {
            report.skip(params, "z = 1 excluded");
        } else {
            QqNum rhs = ring.mul(cmp.exact(quad_char(field, field.neg(a))), cache.at(right, z));
            report.add("transformation", cmp.compare(params, cache.at(left, z), rhs));
        }
        FqElem z2 = field.div(field.mul(c27, b2), field.mul(c4, field.pow(a, 6)));
        Params params2{{"identity", "corollary"}, {"a", elem(field, a)}, {"b", elem(field, b)}, {"z", elem(field, z2)}};
        if (z2 == field.one()) {
            report.skip(params2, "z = 1 excluded");
        } else {
            report.add("corollary", cmp.compare(params2, cache.at(left, z2), cache.at(right, z2)));
        }
    }
}

void run_counts(const SuiteConfig& cfg, const FieldDesc& field, Report& report, bool roots) {
    const u64 q = field.q();
    const int r = static_cast<int>(field.r());
    std::vector<CurveFamily> fams;
    std::vector<GSpec> specs;
    int n_eff_max = 0;
    for (int d : degrees_or(cfg, {3, 4, 5})) {
        if (d < 3) throw Error(ErrorKind::UnsupportedConfig, "curve families need d >= 3");
        if (!admissible(field.p(), d)) {
            report.skip({{"d", d}}, "p divides d(d-1)");
            continue;
        }
        for (auto shape : {CurveShape::Linear, CurveShape::Subleading}) {
            CurveFamily fam{d, field.one(), field.one(), shape};
            fams.push_back(fam);
            int n_eff = std::max(cfg.precision, pinning_precision(field.p(), roots ? static_cast<u64>(d) : 2 * q));
            n_eff_max = std::max(n_eff_max, n_eff);
            specs.push_back(roots ? root_count_spec(fam) : point_count_spec(fam));
        }
    }
    if (fams.empty()) return;
    const int g_prec = roots ? n_eff_max : std::max(1, n_eff_max - r);
    const int digits = digits_for(field, specs, g_prec);
    report.n_work = digits;
    GContext ctx(field, digits);
    const Qq& ring = ctx.ring();
    const auto pairs = pair_grid(field, cfg.grid, cfg.seed, 13);
    for (auto fam : fams) {
        const int n_eff = std::max(cfg.precision, pinning_precision(field.p(), roots ? static_cast<u64>(fam.d) : 2 * q));
        Comparator cmp(ring, n_eff);
        for (auto [a, b] : pairs) {
            fam.a = a;
            fam.b = b;
            u64 truth = roots ? count_poly_roots(field, family_polynomial(field, fam)) : count_curve_points(field, fam);
            QqNum predicted = roots ? predicted_root_count(ctx, fam, n_eff) : predicted_curve_points(ctx, fam, n_eff);
            Params params{{"shape", shape_name(fam.shape)}, {"d", fam.d}, {"a", elem(field, a)}, {"b", elem(field, b)},
                          {"brute force", static_cast<i64>(truth)}, {"N_eff", n_eff}};
            report.add(std::string(shape_name(fam.shape)) + "/d" + std::to_string(fam.d),
                       cmp.compare(std::move(params), predicted, ring.from_int(static_cast<i64>(truth), n_eff)));
        }
    }
}

void run_specials(const SuiteConfig& cfg, const FieldDesc& field, Report& report) {
    const u64 p = field.p();
    if (p < 5) {
        report.skip({{"p", static_cast<i64>(p)}}, "requires p >= 5");
        return;
    }
    const int n = cfg.precision;
    const GSpec two{{{0}, {1, 2}}, {{1, 6}, {5, 6}}};
    const GSpec three{{{1, 6}, {1, 2}, {5, 6}}, {{0}, {1, 4}, {3, 4}}};
    const GSpec four{{{0}, {1, 4}, {1, 2}, {3, 4}}, {{1, 10}, {3, 10}, {7, 10}, {9, 10}}};
    const bool four_ok = p > 7 && p != 23;
    std::vector<GSpec> specs{two, three};
    if (four_ok) specs.push_back(four);
    const int digits = digits_for(field, specs, n);
    report.n_work = digits;
    GContext ctx(field, digits);
    const Qq& ring = ctx.ring();
    Comparator cmp(ring, n);
    GCache cache(ctx, n);
    auto phi = [&](i64 v) { return quad_char(field, field.from_int(v)); };
    auto ratio = [&](i64 num, i64 den) { return field.div(field.from_int(num), field.from_int(den)); };

    report.add("example-phi3", cmp.compare({{"identity", "example-phi3"}, {"t", "1"}}, cache.at(two, field.one()), cmp.exact(phi(3))));
    if (p > 7)
        report.add("example-243/343", cmp.compare({{"identity", "example-243/343"}, {"t", "243/343"}},
                                                  cache.at(two, ratio(243, 343)), cmp.exact(2 * phi(7))));
    else
        report.skip({{"identity", "example-243/343"}}, "requires p > 7");
    if (p > 13)
        report.add("example-972/2197", cmp.compare({{"identity", "example-972/2197"}, {"t", "972/2197"}},
                                                   cache.at(two, ratio(972, 2197)), cmp.exact(2 * phi(13))));
    else
        report.skip({{"identity", "example-972/2197"}}, "requires p > 13");
    report.add("three-term", cmp.compare({{"identity", "three-term"}, {"t", "1"}}, cache.at(three, field.one()),
                                         cmp.exact(phi(-3) + phi(6))));
    if (four_ok) {
        QqNum rhs = ring.add(cmp.exact(phi(-1) + phi(3)), ring.mul(cmp.exact(phi(-1)), cache.at(two, ratio(27, 4))));
        report.add("four-term", cmp.compare({{"identity", "four-term"}, {"t", "-3125/256"}}, cache.at(four, ratio(-3125, 256)), rhs));
    } else {
        report.skip({{"identity", "four-term"}}, "requires p > 7 and p != 23");
    }

    const FqElem c27 = field.from_int(27), c4 = field.from_int(4);
    auto multiplicity = [](FqElem a, FqElem b, FqElem c) { return (a != b && b != c && a != c) ? 2 : 1; };
    for (auto [a, b] : pair_grid(field, cfg.grid, cfg.seed, 49)) {
        // a + b + c = 0
        FqElem c = field.neg(field.add(a, b));
        if (!c.is_zero()) {
            FqElem e = field.add(field.add(field.mul(a, b), field.mul(b, c)), field.mul(c, a));
            if (!e.is_zero()) {
                FqElem abc = field.mul(field.mul(a, b), c);
                FqElem t = field.neg(field.div(field.mul(c27, field.square(abc)), field.mul(c4, field.pow(e, 3))));
                i64 value = multiplicity(a, b, c) * quad_char(field, field.neg(e));
                report.add("sum-zero", cmp.compare({{"identity", "sum-zero"}, {"a", elem(field, a)}, {"b", elem(field, b)},
                                                    {"c", elem(field, c)}},
                                                   cache.at(two, t), cmp.exact(value)));
            }
        }
        // ab + bc + ca = 0, so c = -ab/(a + b)
        FqElem s_ab = field.add(a, b);
        if (!s_ab.is_zero()) {
            FqElem c2 = field.neg(field.div(field.mul(a, b), s_ab));
            FqElem s = field.add(s_ab, c2);
            if (!s.is_zero()) {
                FqElem abc = field.mul(field.mul(a, b), c2);
                FqElem t = field.neg(field.div(field.mul(c27, abc), field.mul(c4, field.pow(s, 3))));
                i64 value = multiplicity(a, b, c2) * quad_char(field, field.neg(field.mul(abc, s)));
                report.add("pair-sum-zero", cmp.compare({{"identity", "pair-sum-zero"}, {"a", elem(field, a)},
                                                         {"b", elem(field, b)}, {"c", elem(field, c2)}},
                                                        cache.at(two, t), cmp.exact(value)));
            }
        }
    }
}

void run_gauss_complex(const SuiteConfig& cfg, const FieldDesc& field, Report& report) {
    GaussLemmaReport lemmas = check_gauss_lemmas(field, cfg.tolerance);
    for (auto& c : lemmas.cases) {
        std::string g = group_of(c);
        report.add(g, std::move(c));
    }
    ComplexOracle oracle(field);
    for (u64 k : {2, 3}) {
        if (field.order() % k != 0 || k % field.p() == 0) {
            report.skip({{"identity", "davenport-hasse"}, {"k", static_cast<i64>(k)}}, "requires q = 1 mod k and p not dividing k");
            continue;
        }
        for (i64 s = 0; s < static_cast<i64>(field.order()); ++s)
            report.add("davenport-hasse", davenport_hasse_case(oracle, k, s, cfg.tolerance));
    }
}

void run_gross_koblitz(const SuiteConfig& cfg, const FieldDesc& field, Report& report) {
    const int m = cfg.pi_precision;
    const int digits = GrossKoblitzOracle::gamma_precision_needed(field.p(), m);
    report.n_work = digits;
    GammaTable gamma(field.p(), digits);
    GrossKoblitzOracle oracle(field, gamma, m);
    for (i64 a = 0; a <= static_cast<i64>(field.q()) - 2; ++a) report.add("gross-koblitz", oracle.check(a));
}

nlohmann::ordered_json params_json(const Params& params) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : params) std::visit([&](const auto& x) { j[k] = x; }, v);
    return j;
}

}  // namespace

const char* suite_name(Suite suite) {
    for (const auto& e : kSuites)
        if (e.suite == suite) return e.name;
    return "";
}

std::optional<Suite> parse_suite(const std::string& name) {
    for (const auto& e : kSuites)
        if (name == e.name) return e.suite;
    return std::nullopt;
}

const std::vector<Suite>& all_suites() {
    static const std::vector<Suite> suites = [] {
        std::vector<Suite> v;
        for (const auto& e : kSuites) v.push_back(e.suite);
        return v;
    }();
    return suites;
}

Grid Grid::parse(const std::string& text) {
    Grid g;
    if (text == "exhaustive") {
        g.exhaustive = true;
        return g;
    }
    const std::string prefix = "sample:";
    if (text.rfind(prefix, 0) == 0) {
        std::string k = text.substr(prefix.size());
        if (!k.empty() && std::all_of(k.begin(), k.end(), ::isdigit)) {
            g.samples = std::stoull(k);
            if (*g.samples > 0) return g;
        }
    }
    throw Error(ErrorKind::ParseError, "grid must be 'exhaustive' or 'sample:K' with K > 0");
}

std::string Grid::str() const {
    if (exhaustive) return "exhaustive";
    if (samples) return "sample:" + std::to_string(*samples);
    return "default";
}

std::vector<std::pair<FqElem, FqElem>> pair_grid(const FieldDesc& field, const Grid& grid, u64 seed, u64 exhaustive_limit) {
    const u64 n = field.order();
    const u64 total = n * n;
    const bool exhaustive = grid.exhaustive || (!grid.samples && field.q() <= exhaustive_limit);
    const u64 k = grid.samples.value_or(50);
    std::vector<std::pair<FqElem, FqElem>> out;
    auto at = [&](u64 idx) {
        return std::pair{FqElem{static_cast<std::uint32_t>(1 + idx / n)}, FqElem{static_cast<std::uint32_t>(1 + idx % n)}};
    };
    if (exhaustive || k >= total) {
        for (u64 idx = 0; idx < total; ++idx) out.push_back(at(idx));
        return out;
    }
    Lcg rng(seed);
    std::set<u64> chosen;
    while (chosen.size() < k) chosen.insert(rng.next() % total);
    for (u64 idx : chosen) out.push_back(at(idx));
    return out;
}

void Report::add(const std::string& group, CheckCase c) {
    auto& t = tallies[group];
    if (c.equal) {
        ++passed;
        ++t.first;
    } else {
        ++failed;
        ++t.second;
    }
    cases.push_back(std::move(c));
}

void Report::add_all(const std::string& group, std::vector<CheckCase> cs) {
    for (auto& c : cs) add(group, std::move(c));
}

void Report::skip(std::vector<std::pair<std::string, ParamValue>> params, std::string reason) {
    skipped.push_back({std::move(params), std::move(reason)});
}

std::string Report::to_json(bool include_wall_time) const {
    nlohmann::ordered_json j;
    j["schemaVersion"] = 1;
    j["header"] = {{"p", p},         {"r", r},         {"q", q},       {"modulus", modulus}, {"generator", generator},
                   {"N_req", n_req}, {"N_work", n_work}, {"suite", suite}, {"seed", seed},       {"grid", grid}};
    auto& cs = j["cases"] = nlohmann::ordered_json::array();
    for (const auto& c : cases)
        cs.push_back({{"params", params_json(c.params)}, {"lhsText", c.lhs}, {"rhsText", c.rhs}, {"equal", c.equal}});
    auto& sk = j["skipped"] = nlohmann::ordered_json::array();
    for (const auto& s : skipped) sk.push_back({{"params", params_json(s.params)}, {"reason", s.reason}});
    auto& tl = j["tallies"] = nlohmann::ordered_json::object();
    for (const auto& [g, t] : tallies) tl[g] = {{"passed", t.first}, {"failed", t.second}};
    j["passed"] = passed;
    j["failed"] = failed;
    if (include_wall_time) j["wallMillis"] = wall_millis;
    return j.dump(2);
}

Report run_suite(const SuiteConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    if (cfg.precision < 1) throw Error(ErrorKind::UnsupportedConfig, "precision must be at least 1");
    if (cfg.pi_precision < 2) throw Error(ErrorKind::UnsupportedConfig, "pi-adic precision must be at least 2");
    if (!(cfg.tolerance > 0)) throw Error(ErrorKind::UnsupportedConfig, "tolerance must be positive");
    FieldDesc field = FieldDesc::build(cfg.p, cfg.r);

    Report report;
    report.p = field.p();
    report.r = field.r();
    report.q = field.q();
    report.modulus = field.modulus();
    report.generator = field.coeffs(field.generator());
    report.n_req = cfg.precision;
    report.suite = suite_name(cfg.suite);
    report.seed = cfg.seed;
    report.grid = cfg.grid.str();

    switch (cfg.suite) {
        case Suite::Floors: run_floors(cfg, field, report); break;
        case Suite::GammaLemmas: run_gamma_lemmas(cfg, field, report); break;
        case Suite::GfunProps: run_gfun_props(cfg, field, report); break;
        case Suite::SumEven: run_sums(cfg, field, report, true); break;
        case Suite::SumOdd: run_sums(cfg, field, report, false); break;
        case Suite::Transform2G2: run_transform(cfg, field, report); break;
        case Suite::Counts: run_counts(cfg, field, report, false); break;
        case Suite::Roots: run_counts(cfg, field, report, true); break;
        case Suite::Specials: run_specials(cfg, field, report); break;
        case Suite::GaussComplex: run_gauss_complex(cfg, field, report); break;
        case Suite::GrossKoblitz: run_gross_koblitz(cfg, field, report); break;
    }
    report.wall_millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace ffhyper

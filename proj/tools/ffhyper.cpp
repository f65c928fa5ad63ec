#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ffhyper/counts.hpp"
#include "ffhyper/error.hpp"
#include "ffhyper/ff.hpp"
#include "ffhyper/gammap.hpp"
#include "ffhyper/gauss.hpp"
#include "ffhyper/gfun.hpp"
#include "ffhyper/harness.hpp"
#include "ffhyper/padic.hpp"

using namespace ffhyper;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string complex_str(ComplexVal z) {
    auto clean = [](double v) { return std::abs(v) < 5e-11 ? 0.0 : v; };
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.10f%+.10fi", clean(z.real()), clean(z.imag()));
    return buf;
}

int cmd_gamma(u64 p, int prec, const std::string& x) {
    GammaTable table(p, prec);
    std::cout << qp_str(gamma_p(table, Rational::parse(x)), p) << "\n";
    return kExitPass;
}

int cmd_eval_g(std::uint32_t p, std::uint32_t r, int prec, const std::string& upper, const std::string& lower,
               const std::string& t) {
    FieldDesc field = FieldDesc::build(p, r);
    GSpec spec{parse_rational_list(upper), parse_rational_list(lower)};
    FqElem arg = parse_element(field, t);
    GContext ctx(field, PreparedG::digits_needed(field, spec, prec));
    GValue g = eval_G(ctx, spec, arg, prec);
    std::cout << ctx.ring().str(g.value) << "\n";
    std::cout << "guaranteed absolute precision: " << g.guaranteed_precision << "\n";
    return kExitPass;
}

int cmd_count(std::uint32_t p, std::uint32_t r, int d, const std::string& a, const std::string& b, const std::string& shape,
              bool predict, int prec) {
    FieldDesc field = FieldDesc::build(p, r);
    CurveFamily fam{d, parse_element(field, a), parse_element(field, b), parse_shape(shape)};
    u64 points = count_curve_points(field, fam);
    u64 roots = count_poly_roots(field, family_polynomial(field, fam));
    std::cout << "points: " << points << "\n";
    std::cout << "roots: " << roots << "\n";
    if (!predict) return kExitPass;

    const int n_points = std::max(prec, pinning_precision(p, 2 * static_cast<u64>(field.q())));
    const int n_roots = std::max(prec, pinning_precision(p, static_cast<u64>(d)));
    GContext ctx(field, std::max(prediction_digits(field, fam, n_points), prediction_digits(field, fam, n_roots)));
    const Qq& ring = ctx.ring();
    QqNum pp = predicted_curve_points(ctx, fam, n_points);
    QqNum pr = predicted_root_count(ctx, fam, n_roots);
    bool ok_points = ring.equal_mod(pp, ring.from_int(static_cast<i64>(points), n_points), n_points);
    bool ok_roots = ring.equal_mod(pr, ring.from_int(static_cast<i64>(roots), n_roots), n_roots);
    std::cout << "predicted points: " << ring.str(pp) << " " << (ok_points ? "agrees" : "DISAGREES") << "\n";
    std::cout << "predicted roots: " << ring.str(pr) << " " << (ok_roots ? "agrees" : "DISAGREES") << "\n";
    return ok_points && ok_roots ? kExitPass : kExitFail;
}

int cmd_gauss(std::uint32_t p, std::uint32_t r, const std::string& mode, std::optional<i64> a, double tol, int piprec) {
    FieldDesc field = FieldDesc::build(p, r);
    const i64 order = field.order();
    if (mode == "complex") {
        if (a) {
            std::cout << complex_str(gauss_sum_complex(field, *a)) << "\n";
            return kExitPass;
        }
        GaussLemmaReport rep = check_gauss_lemmas(field, tol);
        std::size_t failed = 0;
        for (const auto& c : rep.cases) failed += !c.equal;
        std::cout << "cases: " << rep.cases.size() << " failed: " << failed << " max deviation: " << rep.max_deviation << "\n";
        return rep.passed ? kExitPass : kExitFail;
    }
    if (mode != "padic") throw Error(ErrorKind::ParseError, "mode must be complex or padic");
    GammaTable gamma(p, GrossKoblitzOracle::gamma_precision_needed(p, piprec));
    GrossKoblitzOracle oracle(field, gamma, piprec);
    bool ok = true;
    for (i64 k = a.value_or(0); k <= (a ? *a : order - 1); ++k) {
        CheckCase c = oracle.check(((k % order) + order) % order);
        ok = ok && c.equal;
        std::cout << "a=" << k << " gauss: " << c.lhs << "\n";
        std::cout << "a=" << k << " gamma: " << c.rhs << " " << (c.equal ? "agrees" : "DISAGREES") << "\n";
    }
    return ok ? kExitPass : kExitFail;
}

int cmd_verify(SuiteConfig cfg, const std::string& suite, const std::string& grid, std::optional<int> d,
               const std::string& json_path) {
    auto s = parse_suite(suite);
    if (!s) throw Error(ErrorKind::ParseError, "unknown suite '" + suite + "'");
    cfg.suite = *s;
    if (!grid.empty()) cfg.grid = Grid::parse(grid);
    if (d) cfg.degrees = {*d};
    Report rep = run_suite(cfg);
    for (const auto& c : rep.cases) {
        if (c.equal) continue;
        std::cout << "FAIL";
        for (const auto& [k, v] : c.params)
            std::visit([&](const auto& x) { std::cout << " " << k << "=" << x; }, v);
        std::cout << ": " << c.lhs << " vs " << c.rhs << "\n";
    }
    std::cout << rep.suite << " q=" << rep.q << ": passed " << rep.passed << ", failed " << rep.failed << ", skipped "
              << rep.skipped.size() << " (" << rep.wall_millis << " ms)\n";
    if (!json_path.empty()) {
        if (json_path == "-") {
            std::cout << rep.to_json() << "\n";
        } else {
            std::ofstream out(json_path);
            if (!out) throw Error(ErrorKind::UnsupportedConfig, "cannot write " + json_path);
            out << rep.to_json() << "\n";
        }
    }
    return rep.ok() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic hypergeometric functions over finite fields"};
    app.require_subcommand(1);

    std::uint32_t p = 5, r = 1;
    int prec = 4;

    auto* gamma = app.add_subcommand("gamma", "Morita gamma value");
    std::string x;
    gamma->add_option("--p", p, "prime")->required();
    gamma->add_option("--prec", prec, "p-adic digits")->required();
    gamma->add_option("--x", x, "rational NUM/DEN")->required();

    auto* evalg = app.add_subcommand("eval-g", "evaluate the hypergeometric function at t");
    std::string upper, lower, t;
    evalg->add_option("--p", p)->required();
    evalg->add_option("--r", r)->default_val(1);
    evalg->add_option("--prec", prec)->required();
    evalg->add_option("--upper", upper, "comma-separated rationals")->required();
    evalg->add_option("--lower", lower, "comma-separated rationals")->required();
    evalg->add_option("--t", t, "element as comma-separated prime-field coefficients")->required();

    auto* count = app.add_subcommand("count", "affine points and trinomial roots");
    int d = 3;
    std::string a_text, b_text, shape = "linear";
    bool predict = false;
    count->add_option("--p", p)->required();
    count->add_option("--r", r)->default_val(1);
    count->add_option("--d", d)->required();
    count->add_option("--a", a_text)->required();
    count->add_option("--b", b_text)->required();
    count->add_option("--shape", shape)->check(CLI::IsMember({"linear", "subleading"}));
    count->add_flag("--predict", predict, "compare with the closed forms");
    count->add_option("--prec", prec);

    auto* gauss = app.add_subcommand("gauss", "Gauss sums, complex or pi-adic");
    std::string mode;
    std::optional<i64> a_index;
    double tol = 1e-8;
    int piprec = 12;
    gauss->add_option("--p", p)->required();
    gauss->add_option("--r", r)->default_val(1);
    gauss->add_option("--mode", mode)->required()->check(CLI::IsMember({"complex", "padic"}));
    gauss->add_option("--a", a_index);
    auto* tol_opt = gauss->add_option("--tol", tol);
    auto* pi_opt = gauss->add_option("--piprec", piprec);
    tol_opt->excludes(pi_opt);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    SuiteConfig cfg;
    std::string suite, grid, json_path;
    std::optional<int> degree;
    verify->add_option("--suite", suite)->required();
    verify->add_option("--p", cfg.p)->required();
    verify->add_option("--r", cfg.r)->default_val(1);
    verify->add_option("--d", degree);
    verify->add_option("--prec", cfg.precision)->required();
    verify->add_option("--grid", grid, "exhaustive or sample:K");
    verify->add_option("--seed", cfg.seed);
    verify->add_option("--json", json_path, "report path, - for stdout");
    verify->add_option("--piprec", cfg.pi_precision, "pi-adic precision for gross-koblitz");
    verify->add_option("--tol", cfg.tolerance, "tolerance for gauss-complex");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*gamma) return cmd_gamma(p, prec, x);
        if (*evalg) return cmd_eval_g(p, r, prec, upper, lower, t);
        if (*count) return cmd_count(p, r, d, a_text, b_text, shape, predict, prec);
        if (*gauss) return cmd_gauss(p, r, mode, a_index, tol, piprec);
        if (*verify) return cmd_verify(cfg, suite, grid, degree, json_path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}

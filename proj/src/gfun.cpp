#include "ffhyper/gfun.hpp"

#include <algorithm>
#include <sstream>

#include "ffhyper/error.hpp"

namespace ffhyper {

namespace {

void validate(const FieldDesc& field, const GSpec& spec) {
    if (spec.upper.empty() || spec.upper.size() != spec.lower.size())
        throw Error(ErrorKind::DomainError, "parameter lists must be nonempty and of equal length");
    for (const auto* list : {&spec.upper, &spec.lower})
        for (const auto& a : *list)
            if (a.den() % static_cast<i64>(field.p()) == 0)
                throw Error(ErrorKind::NotPIntegral, "parameter " + a.str() + " is not " + std::to_string(field.p()) + "-integral");
}

// Total (-p)-exponent of the j-th summand.
int summand_exponent(const FieldDesc& field, const GSpec& spec, i64 j) {
    const i64 p = field.p(), q = field.q();
    int e = 0;
    for (std::size_t i = 0; i < spec.arity(); ++i) {
        i64 pk = 1;
        for (std::uint32_t k = 0; k < field.r(); ++k, pk *= p) {
            Rational shift(j * pk, q - 1);
            i64 term = -((spec.upper[i] * pk).frac() - shift).floor() - ((-spec.lower[i] * pk).frac() + shift).floor();
            if (term < -1 || term > 1)
                throw Error(ErrorKind::PrecisionExhausted, "summand exponent term out of range");
            e += static_cast<int>(term);
        }
    }
    if (e < -static_cast<int>(spec.arity() * field.r()))
        throw Error(ErrorKind::PrecisionExhausted, "summand valuation below -n*r");
    return e;
}

}  // namespace

std::string GSpec::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < upper.size(); ++i) os << (i ? ", " : "") << upper[i];
    os << "; ";
    for (std::size_t i = 0; i < lower.size(); ++i) os << (i ? ", " : "") << lower[i];
    os << ']';
    return os.str();
}

GSpec canonicalize(const GSpec& spec) {
    GSpec out;
    for (const auto& a : spec.upper) out.upper.push_back(a.frac());
    for (const auto& b : spec.lower) out.lower.push_back(b.frac());
    std::sort(out.upper.begin(), out.upper.end());
    std::sort(out.lower.begin(), out.lower.end());
    return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove(item.begin(), item.end(), ' '), item.end());
        out.push_back(Rational::parse(item));
    }
    if (out.empty()) throw Error(ErrorKind::ParseError, "empty parameter list");
    return out;
}

ParamPair build_params(ParamFamily family, int d) {
    const bool even = family == ParamFamily::EvenDegree;
    if (even && (d < 4 || d % 2 != 0)) throw Error(ErrorKind::UnsupportedConfig, "even-degree family needs even d >= 4");
    if (!even && (d < 3 || d % 2 == 0)) throw Error(ErrorKind::UnsupportedConfig, "odd-degree family needs odd d >= 3");

    auto halves_of = [](int den) {  // h/(2 den) for odd h < 2 den - 1
        std::vector<Rational> v;
        for (int h = 1; h <= 2 * den - 1; h += 2) v.emplace_back(h, 2 * den);
        return v;
    };
    ParamPair out;
    if (even) {
        out.main.upper = halves_of(d - 1);
        out.main.lower.emplace_back(0);
        for (int h = 1; h < d; ++h)
            if (2 * h != d) {
                out.main.lower.emplace_back(h, d);
                out.reduced.lower.emplace_back(h, d);
            }
        for (int h = 1; h <= d - 2; ++h) out.reduced.upper.emplace_back(h, d - 1);
        return out;
    }
    for (int h = 0; h <= d - 2; ++h) out.main.upper.emplace_back(h, d - 1);
    for (int h = 1; h <= 2 * d - 1; h += 2)
        if (h != d) out.main.lower.emplace_back(h, 2 * d);
    if (family == ParamFamily::OddDegree) {
        out.reduced.upper = halves_of(d - 1);
        out.reduced.lower = out.main.lower;
    } else {
        for (int h = 1; h <= d - 2; ++h) out.reduced.upper.emplace_back(h, d - 1);
        out.reduced.upper.emplace_back(1, 2);
        for (int h = 1; h < d; ++h) out.reduced.lower.emplace_back(h, d);
    }
    return out;
}

void require_admissible_degree(u64 p, int d) {
    if (d < 2) throw Error(ErrorKind::UnsupportedConfig, "degree must be at least 2");
    if (static_cast<u64>(d) % p == 0 || static_cast<u64>(d - 1) % p == 0)
        throw Error(ErrorKind::UnsupportedConfig,
                    "p = " + std::to_string(p) + " divides d(d-1) for d = " + std::to_string(d));
}

GContext::GContext(const FieldDesc& field, int work_precision)
    : field_(&field),
      ring_(field),
      work_precision_(work_precision),
      gamma_(field.p(), work_precision),
      teich_(ring_, work_precision) {}

int PreparedG::min_exponent(const FieldDesc& field, const GSpec& spec) {
    validate(field, spec);
    int e_min = summand_exponent(field, spec, 0);
    for (i64 j = 1; j < static_cast<i64>(field.order()); ++j) e_min = std::min(e_min, summand_exponent(field, spec, j));
    return e_min;
}

int PreparedG::digits_needed(const FieldDesc& field, const GSpec& spec, int n_req) {
    return std::max(1, n_req - min_exponent(field, spec));
}

PreparedG::PreparedG(const GContext& ctx, const GSpec& spec, int n_req) : ctx_(&ctx), spec_(spec), n_req_(n_req) {
    const FieldDesc& field = ctx.field();
    if (n_req < 1) throw Error(ErrorKind::DomainError, "requested precision must be positive");
    e_min_ = min_exponent(field, spec);
    digits_ = std::max(1, n_req - e_min_);
    if (digits_ > ctx.work_precision())
        throw Error(ErrorKind::PrecisionExhausted, "evaluation needs working precision " + std::to_string(digits_) +
                                                       ", context holds " + std::to_string(ctx.work_precision()));
    mod_ = prime_power(field.p(), digits_);

    const GammaTable& gamma = ctx.gamma();
    const i64 p = field.p(), q = field.q();
    const std::size_t n = spec.arity();
    const u64 inv_neg = invmod(negmod(static_cast<u64>(q - 1) % mod_, mod_), mod_);

    // Denominator gammas do not depend on j.
    u64 base = 1 % mod_;
    for (std::size_t i = 0; i < n; ++i) {
        i64 pk = 1;
        for (std::uint32_t k = 0; k < field.r(); ++k, pk *= p) {
            base = mulmod(base, gamma.value((spec.upper[i] * pk).frac()) % mod_, mod_);
            base = mulmod(base, gamma.value((-spec.lower[i] * pk).frac()) % mod_, mod_);
        }
    }
    const u64 scale = mulmod(invmod(base, mod_), inv_neg, mod_);

    coeff_.assign(field.order(), 0);
    for (i64 j = 0; j < q - 1; ++j) {
        int e = summand_exponent(field, spec, j);
        if (e - e_min_ >= digits_) continue;
        u64 u = scale;
        for (std::size_t i = 0; i < n; ++i) {
            i64 pk = 1;
            for (std::uint32_t k = 0; k < field.r(); ++k, pk *= p) {
                Rational shift(j * pk, q - 1);
                u = mulmod(u, gamma.value(((spec.upper[i] * pk) - shift).frac()) % mod_, mod_);
                u = mulmod(u, gamma.value(((-spec.lower[i] * pk) + shift).frac()) % mod_, mod_);
            }
        }
        u = mulmod(u, prime_power(field.p(), e - e_min_), mod_);
        // (-1)^{jn} from the summand and (-1)^e from (-p)^e
        bool negative = ((j * static_cast<i64>(n)) % 2 != 0) != (e % 2 != 0);
        coeff_[j] = negative ? negmod(u, mod_) : u;
    }
}

GValue PreparedG::eval(FqElem t) const {
    const FieldDesc& field = ctx_->field();
    const int guaranteed = e_min_ + digits_;
    if (t.is_zero()) return {ctx_->ring().zero(guaranteed), n_req_, guaranteed};

    const u64 order = field.order();
    const u64 ell = field.log(t);
    const TeichmullerTable& teich = ctx_->teich();
    const std::uint32_t r = field.r();
    std::vector<u64> acc(r, 0);
    u64 idx = 0;  // (-j * ell) mod (q-1)
    for (u64 j = 0; j < order; ++j) {
        u64 c = coeff_[j];
        if (c != 0) {
            const u64* w = teich.power(idx);
            for (std::uint32_t i = 0; i < r; ++i) acc[i] = addmod(acc[i], mulmod(c, w[i] % mod_, mod_), mod_);
        }
        idx = idx >= ell ? idx - ell : idx + order - ell;
    }
    QqNum value = ctx_->ring().make(e_min_, std::move(acc), digits_);
    if (!value.is_zero() && value.valuation < -static_cast<int>(spec_.arity() * r))
        throw Error(ErrorKind::PrecisionExhausted, "value valuation below -n*r");
    return {std::move(value), n_req_, guaranteed};
}

GValue eval_G(const GContext& ctx, const GSpec& spec, FqElem t, int n_req) { return PreparedG(ctx, spec, n_req).eval(t); }

}  // namespace ffhyper

#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ffhyper/ff.hpp"
#include "ffhyper/gammap.hpp"
#include "ffhyper/padic.hpp"
#include "ffhyper/rational.hpp"

namespace ffhyper {

// Parameters a_1..a_n over b_1..b_n of the n-ary function.
struct GSpec {
    std::vector<Rational> upper;
    std::vector<Rational> lower;

    std::size_t arity() const { return upper.size(); }
    // "[a_1, ..., a_n; b_1, ..., b_n]"
    std::string str() const;
    friend bool operator==(const GSpec&, const GSpec&) = default;
};

struct GValue {
    QqNum value;
    int requested_precision = 0;
    int guaranteed_precision = 0;  // absolute
};

// Fractional parts, each list sorted ascending.
GSpec canonicalize(const GSpec& spec);

// Parses comma-separated rationals such as "1/6,1/2,5/6".
std::vector<Rational> parse_rational_list(const std::string& text);

enum class ParamFamily {
    EvenDegree,       // y^2 = x^d + ax + b and its subleading twin, d even
    OddDegree,        // y^2 = x^d + ax + b, d odd
    OddDegreePrimed,  // y^2 = x^d + ax^{d-1} + b, d odd
};

struct ParamPair {
    GSpec main;     // (d-1)-ary
    GSpec reduced;  // (d-2)-ary for even d, (d-1)-ary for odd d
};

ParamPair build_params(ParamFamily family, int d);

// Throws UnsupportedConfig when p divides d(d-1).
void require_admissible_degree(u64 p, int d);

// Field together with the gamma and Teichmuller tables at a common working precision.
class GContext {
public:
    GContext(const FieldDesc& field, int work_precision);

    const FieldDesc& field() const { return *field_; }
    const Qq& ring() const { return ring_; }
    const GammaTable& gamma() const { return gamma_; }
    const TeichmullerTable& teich() const { return teich_; }
    int work_precision() const { return work_precision_; }

private:
    const FieldDesc* field_;
    Qq ring_;
    int work_precision_;
    GammaTable gamma_;
    TeichmullerTable teich_;
};

// The sum over j with the t-independent coefficients computed once.
class PreparedG {
public:
    PreparedG(const GContext& ctx, const GSpec& spec, int n_req);

    // Digits of gamma and Teichmuller precision needed for n_req absolute digits.
    static int digits_needed(const FieldDesc& field, const GSpec& spec, int n_req);
    // Smallest total (-p)-exponent over all summands.
    static int min_exponent(const FieldDesc& field, const GSpec& spec);

    GValue eval(FqElem t) const;
    const GSpec& spec() const { return spec_; }
    int min_exponent() const { return e_min_; }
    int digits() const { return digits_; }

private:
    const GContext* ctx_;
    GSpec spec_;
    int n_req_;
    int e_min_ = 0;
    int digits_ = 0;
    u64 mod_ = 1;
    std::vector<u64> coeff_;
};

GValue eval_G(const GContext& ctx, const GSpec& spec, FqElem t, int n_req);

}  // namespace ffhyper

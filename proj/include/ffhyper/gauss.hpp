#pragma once

#include <complex>
#include <vector>

#include "ffhyper/check.hpp"
#include "ffhyper/ff.hpp"
#include "ffhyper/gammap.hpp"
#include "ffhyper/padic.hpp"

namespace ffhyper {

using ComplexVal = std::complex<double>;

// Sum over x != 0 of exp(2 pi i m dlog(x)/(q-1)) exp(2 pi i tr(x)/p).
ComplexVal gauss_sum_complex(const FieldDesc& field, i64 m);

// Characters, additive character and all Gauss sums of a field, realized in C.
class ComplexOracle {
public:
    explicit ComplexOracle(const FieldDesc& field);

    const FieldDesc& field() const { return *field_; }
    // T^m(x), with T^m(0) = 0
    ComplexVal character(i64 m, FqElem x) const;
    ComplexVal theta(FqElem x) const;
    ComplexVal gauss(i64 m) const;

private:
    const FieldDesc* field_;
    std::vector<ComplexVal> roots_;  // exp(2 pi i e/(q-1))
    std::vector<ComplexVal> theta_;
    std::vector<ComplexVal> gauss_;
};

struct GaussLemmaReport {
    std::vector<CheckCase> cases;
    double max_deviation = 0;
    bool passed = true;
};

// Magnitudes, G_0 = -1, G_k G_{-k} = q T^k(-1), the theta expansion, additivity of theta,
// the vanishing theta sum and both orthogonality relations.
GaussLemmaReport check_gauss_lemmas(const FieldDesc& field, double tol);

// Davenport-Hasse for characters of order dividing k twisted by psi = T^psi_index.
bool check_davenport_hasse(const FieldDesc& field, u64 k, i64 psi_index, double tol);
CheckCase davenport_hasse_case(const ComplexOracle& oracle, u64 k, i64 psi_index, double tol);

// Root of the p-th cyclotomic polynomial with zeta = 1 + pi mod pi^2.
PiAdic zeta_p_piadic(const PiAdicRing& ring);
PiAdic zeta_p_piadic(u64 p, int m);

// Evaluates both sides of the Gross-Koblitz formula modulo pi^m.
class GrossKoblitzOracle {
public:
    GrossKoblitzOracle(const FieldDesc& field, const GammaTable& gamma, int m);

    const PiAdicRing& ring() const { return pi_ring_; }
    const PiAdic& zeta() const { return zeta_powers_[1]; }
    PiAdic gauss_sum(i64 a) const;         // G(omega-bar^a) from its definition
    PiAdic gamma_product(i64 a) const;     // the Gamma_p side
    CheckCase check(i64 a) const;

    // pi-adic digits needed in the gamma table for precision m
    static int gamma_precision_needed(u64 p, int m);

private:
    const FieldDesc* field_;
    const GammaTable* gamma_;
    int m_;
    Qq ring_;
    PiAdicRing pi_ring_;
    TeichmullerTable teich_;
    std::vector<PiAdic> zeta_powers_;
    std::vector<std::uint32_t> trace_;
};

bool check_gross_koblitz(const FieldDesc& field, i64 a, const GammaTable& gamma, int m);

}  // namespace ffhyper

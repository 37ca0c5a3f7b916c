#pragma once

#include <complex>
#include <vector>

#include "resolap/rational.hpp"
#include "resolap/spaces.hpp"

namespace resolap {

using cd = std::complex<double>;

// Exact-coefficient polynomial, ascending degree.
struct RationalPolynomial {
    std::vector<Rational> coeff;

    int degree() const { return static_cast<int>(coeff.size()) - 1; }
    Rational eval(const Rational& x) const;
    cd eval(cd x) const;
    void mul_linear(const Rational& root);  // multiply by (x - root)
    bool operator==(const RationalPolynomial&) const = default;
};

// P from the two displayed product formulas. For odd m_beta both forms are
// expanded and asserted equal.
RationalPolynomial build_P(const RankOneSpace& s);

struct DensityProfile {
    RankOneSpace space;
    RationalPolynomial P;
    bool has_cot;  // m_beta odd; otherwise Q == 1

    std::vector<double> Pd;  // double image of coeff, for the numeric kernels
};

DensityProfile build_profile(const RankOneSpace& s);

// Numerically stable cot(pi u).
cd cot_pi(cd u);

// Complex gamma via Lanczos (g = 7, 9 terms) with reflection; rel. err ~1e-13
// away from poles.
cd lanczos_gamma(cd z);

// p(x) = P(i x / b); q(x) = Q(i x / b) with Q = cot(pi(. - rho)) for odd
// m_beta and Q == 1 otherwise. eval_q throws pole_error on a lattice hit.
cd eval_p(const DensityProfile& prof, cd x);
cd eval_q(const DensityProfile& prof, cd x);
cd eval_p(const RankOneSpace& s, cd x);
cd eval_q(const RankOneSpace& s, cd x);

// Exact P(rho + ell) = p(i L_ell) for odd-multiplicity factors (P is even
// there). Positive for every ell >= 0.
Rational p_at_lattice(const RankOneSpace& s, int ell);
Rational p_at_lattice(const DensityProfile& prof, int ell);

// lambda_beta * P(i lambda_beta) * Q(i lambda_beta), lambda_beta = lam / b:
// the Plancherel density up to the constant c0.
cd density_polyform(const RankOneSpace& s, double lam);

// |c_beta(i nu) c_beta(-i nu)|^{-1} via the gamma-function formula, nu=lam/b,
// dropping the normalization c^0. Independent oracle for density_polyform.
double density_gamma(const RankOneSpace& s, double lam);

}  // namespace resolap

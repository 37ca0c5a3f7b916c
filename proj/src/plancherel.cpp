#include "resolap/plancherel.hpp"

#include <cmath>
#include <numbers>

#include "resolap/errors.hpp"

namespace resolap {

namespace {
constexpr double PI = std::numbers::pi;
const cd iu(0.0, 1.0);
}  // namespace

Rational RationalPolynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * x + *it;
    return acc;
}

cd RationalPolynomial::eval(cd x) const {
    cd acc(0);
    for (auto it = coeff.rbegin(); it != coeff.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
}

void RationalPolynomial::mul_linear(const Rational& root) {
    coeff.push_back(0);
    for (std::size_t i = coeff.size() - 1; i > 0; --i)
        coeff[i] = coeff[i - 1] - root * coeff[i];
    coeff[0] = -root * coeff[0];
}

namespace {
int to_int_exact(const Rational& r) {
    if (denominator(r) != 1) throw std::logic_error("expected an integer rational");
    return numerator(r).convert_to<int>();
}
}  // namespace

RationalPolynomial build_P(const RankOneSpace& s) {
    const Rational rho = s.rho_beta;
    RationalPolynomial P;
    P.coeff = {Rational(1)};
    if (s.m_full % 2 == 0) {
        // even m_beta: prod_{k=0}^{2(rho-1)} (x - (rho-1) + k); here rho is an integer
        const int top = 2 * (to_int_exact(rho) - 1);
        for (int k = 0; k <= top; ++k) P.mul_linear(rho - 1 - k);
        return P;
    }
    // odd m_beta, first displayed form
    const int two_rho = to_int_exact(Rational(2) * rho);
    for (int k = 0; k <= two_rho - 2; ++k) P.mul_linear(rho - 1 - k);
    const Rational mh4(s.m_half, 4);
    for (int k = 0; k < s.m_half / 2; ++k) P.mul_linear(mh4 - Rational(1, 2) - k);
    // second displayed form, k from (m_beta+1)/2; the two must expand identically
    RationalPolynomial Q;
    Q.coeff = {Rational(1)};
    const int lo = (s.m_full + 1) / 2;
    for (int k = lo; k <= two_rho - lo; ++k) Q.mul_linear(rho - k);
    for (int k = 1; k <= two_rho - 1; ++k) Q.mul_linear(rho - k);
    if (!(P == Q)) throw std::logic_error("the two product forms of P disagree");
    return P;
}

DensityProfile build_profile(const RankOneSpace& s) {
    DensityProfile prof;
    prof.space = s;
    prof.P = build_P(s);
    prof.has_cot = s.odd_multiplicity();
    prof.Pd.reserve(prof.P.coeff.size());
    for (const auto& c : prof.P.coeff) prof.Pd.push_back(to_double(c));
    return prof;
}

cd cot_pi(cd u) {
    const cd z = PI * u;
    if (std::abs(z.imag()) > 20.0) {
        // cot is odd; fold to Im > 0 where e^{2iz} is tiny
        const cd zz = z.imag() > 0 ? z : -z;
        const cd t = std::exp(2.0 * iu * zz);
        const cd cot = iu * (t + 1.0) / (t - 1.0);
        return z.imag() > 0 ? cot : -cot;
    }
    return std::cos(z) / std::sin(z);
}

cd lanczos_gamma(cd z) {
    static const double g = 7.0;
    static const double coef[9] = {
        0.99999999999980993,      676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,    12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return PI / (std::sin(PI * z) * lanczos_gamma(1.0 - z));
    }
    z -= 1.0;
    cd x = coef[0];
    for (int i = 1; i < 9; ++i) x += coef[i] / (z + static_cast<double>(i));
    const cd t = z + g + 0.5;
    return std::sqrt(2.0 * PI) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

namespace {

cd eval_poly(const std::vector<double>& c, cd x) {
    cd acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

}  // namespace

cd eval_p(const DensityProfile& prof, cd x) {
    return eval_poly(prof.Pd, iu * x / prof.space.b());
}

cd eval_q(const DensityProfile& prof, cd x) {
    if (!prof.has_cot) return cd(1.0);
    const cd u = iu * x / prof.space.b() - to_double(prof.space.rho_beta);
    // pole at integer u
    const double scale = std::max(1.0, std::abs(u));
    if (std::abs(u.imag()) < 1e-12 * scale) {
        const double r = std::round(u.real());
        if (std::abs(u.real() - r) < 1e-12 * scale)
            throw pole_error("q evaluated at a lattice pole", static_cast<int>(r), x);
    }
    return cot_pi(u);
}

cd eval_p(const RankOneSpace& s, cd x) { return eval_p(build_profile(s), x); }
cd eval_q(const RankOneSpace& s, cd x) { return eval_q(build_profile(s), x); }

Rational p_at_lattice(const DensityProfile& prof, int ell) {
    if (!prof.has_cot) throw empty_lattice_error("even-multiplicity factor has no lattice");
    if (ell < 0) throw parameter_error("ell must be nonnegative");
    // p(i L_ell) = P(-(rho+ell)) = P(rho+ell), P even for odd m_beta
    return prof.P.eval(prof.space.rho_beta + ell);
}

Rational p_at_lattice(const RankOneSpace& s, int ell) {
    if (!s.odd_multiplicity()) throw empty_lattice_error("even-multiplicity factor has no lattice");
    if (ell < 0) throw parameter_error("ell must be nonnegative");
    // evaluate the product form directly; no need to expand P here
    const Rational x = s.rho_beta + ell;
    Rational acc(1);
    const int two_rho = to_int_exact(Rational(2) * s.rho_beta);
    for (int k = 0; k <= two_rho - 2; ++k) acc *= x - (s.rho_beta - 1 - k);
    const Rational mh4(s.m_half, 4);
    for (int k = 0; k < s.m_half / 2; ++k) acc *= x - (mh4 - Rational(1, 2) - k);
    return acc;
}

cd density_polyform(const RankOneSpace& s, double lam) {
    const DensityProfile prof = build_profile(s);
    const double nu = lam / s.b();
    cd q(1.0);
    if (prof.has_cot) q = cot_pi(iu * nu - to_double(s.rho_beta));
    return nu * eval_poly(prof.Pd, cd(0.0, nu)) * q;
}

double density_gamma(const RankOneSpace& s, double lam) {
    if (lam == 0.0) throw map_domain_error("density_gamma requires lambda != 0");
    const double a = s.m_half / 4.0 + 0.5;
    const double rho = to_double(s.rho_beta);
    auto c_beta = [&](cd t) {
        return std::pow(cd(2.0), -2.0 * t) * lanczos_gamma(2.0 * t) /
               (lanczos_gamma(t + a) * lanczos_gamma(t + rho));
    };
    const cd t(0.0, lam / s.b());
    return 1.0 / std::abs(c_beta(t) * c_beta(-t));
}

}  // namespace resolap

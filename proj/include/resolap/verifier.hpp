#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resolap/complexmaps.hpp"
#include "resolap/plancherel.hpp"
#include "resolap/resonances.hpp"
#include "resolap/spaces.hpp"

namespace resolap {

// Even entire stand-in for the convolution with spherical functions: a
// function T(mu1, mu2) of the two spectral coordinates, even in each.
struct SpectralTestFunction {
    enum class Kind { Gaussian, EvenPolynomial };
    Kind kind = Kind::Gaussian;
    double sigma = 1.0;
    // c[a][b] multiplies mu1^{2a} mu2^{2b}
    std::vector<std::vector<double>> poly;

    static SpectralTestFunction gaussian(double sigma);
    static SpectralTestFunction even_polynomial(std::vector<std::vector<double>> coeffs);
    cd eval(cd mu1, cd mu2) const;
};

struct KernelContext {
    ProductSpace product;
    SpectralTestFunction test;
    int nodes = 2048;      // quadrature node count M (even)
    double delta = 1e-3;   // residue-circle radius

    DensityProfile prof1, prof2;

    KernelContext(ProductSpace p, SpectralTestFunction t = SpectralTestFunction::gaussian(1.0),
                  int M = 2048, double d = 1e-3);
    const DensityProfile& profile(int j) const { return j == 1 ? prof1 : prof2; }
};

// psi_z(w) = T(z c(w)/b1, z c(-iw)/b2); even in z and in w.
cd psi(const KernelContext& ctx, cd z, cd w);

// phi_z(w) = -z^2 c(w) s(w)/w p1(z c(w)) q1(z c(w)) p2(z c(-iw)) q2(z c(-iw)).
cd phi(const KernelContext& ctx, cd z, cd w);

// F(z) = int_{|w|=1} psi_z phi_z dw by the trapezoidal rule (spectrally
// accurate; Kahan-compensated). Raises if z is on i((-inf,-L] u [L,inf)) or a
// pole sits too close to the contour for the node budget.
cd angular_integral(const KernelContext& ctx, cd z);
cd angular_integral(const KernelContext& ctx, cd z, double r, int nodes);

// Residue function G_{j,ell} in closed form:
//   G_{1,l}(z) = C_{1,l} psi_z(c^{-1}(iL/z)) p2(i z sc^{-1}(iL/z)) [q2(...)]
//   G_{2,l}(z) = C_{2,l} psi_z(i c^{-1}(iL/z)) p1(i z sc^{-1}(iL/z)) q1(...)
// with C_{j,l} = (b_j/pi) L_{j,l} p_j(i L_{j,l}); the q factor of the other
// side appears only when that factor has odd multiplicity.
cd residue_function(const KernelContext& ctx, int factor, int ell, cd z);

struct DeformedIntegral {
    cd value;               // F_r(z) + 2 pi i G_r(z)
    double r;               // contour radius used
    int enclosed1, enclosed2;  // lattice indices enclosed per factor
};

// Contour-deformation form of F. When r is not given it is chosen from the
// index-count caps at v = |z| (c(r) midway between 1 and the cap). Raises
// contour_collision_error when a lattice point lies on z * dE_{c(r),s(r)}.
DeformedIntegral deformed_angular_integral(const KernelContext& ctx, cd z,
                                           std::optional<double> r = std::nullopt);

// Local expression of the lift of G_{j,ell} in the chart of sign +-1 on the
// double cover branched at +-iL_{j,ell}.
cd residue_function_chart(const KernelContext& ctx, int factor, int ell, int sign, cd zeta);

// (1/2pi i) contour integral on the circle |u - center| = delta, trapezoidal
// with M nodes; re-run at delta/2 and checked for stability.
cd numeric_residue(const std::function<cd(cd)>& fn, cd center, double delta, int M,
                   double rtol = 1e-7, double atol = 1e-12);

// Chart-coordinate residues of the lifted residue functions at the points
// above z = sign * i sqrt(L1^2 + L2^2):
//   factor j residue = sign * (b1 b2/(i pi^2)) (L_j^3/|z|^3) p1(iL1) p2(iL2) W
// where W = T(i(rho1+l1), i(rho2+l2)) is the test-function value at the pole
// (the stand-in for the convolution with phi_{lambda(l1,l2)}).
std::pair<cd, cd> chart_pole_residues(const KernelContext& ctx, int ell1, int ell2, int sign);

// Residue of the lifted continuation of F in the chart of index m (largest
// branch value strictly below |z_(k)|), all-plus section, chart sign eps_m:
//   eps_m (i L_m^2/(pi^2 sqrt(|z_k|^2-L_m^2)))
//     * sum_{S_k} 4 b1 b2 (L1 L2/|z_k|^3) p1(iL1) p2(iL2) W.
cd continuation_residue(const KernelContext& ctx, std::size_t k, int eps_m);
// General section: the residue at the point picked out by the sign vector
// (components indexed by branch position; missing entries default to +1).
// Each pair is weighted by eps_{l(1)} + eps_{l(2)} and the prefactor carries
// the section's m-component; eps_m stays an overall chart-orientation sign.
cd continuation_residue(const KernelContext& ctx, std::size_t k, int eps_m,
                        const SignVector& eps);

// Oracle: the same residue extracted numerically from the chart-transported
// sum of lifted residue functions.
cd continuation_residue_transport(const KernelContext& ctx, std::size_t k, int eps_m,
                                  const SignVector& eps = {});

struct HolomorphyReport {
    double max_residue = 0.0;
    int probes = 0;
};

// One-odd products: probe every point where the two-odd case would have a
// pole (odd-factor lattice crossed with the even factor's would-be lattice)
// and report the largest numeric chart residue.
HolomorphyReport verify_no_resonance_one_odd(const KernelContext& ctx, const Rational& R_sq);

struct CheckResult {
    std::string name;
    std::string inputs;
    double measured;
    double tolerance;
    bool pass;
};

struct VerifyOptions {
    std::uint64_t seed = 12345;
    std::optional<double> deformation_tol;  // override for the deformation check
    bool quick = false;                     // reduced sample counts
};

// Full verification suite for one product; deterministic given the seed.
std::vector<CheckResult> run_verification(const KernelContext& ctx, const VerifyOptions& opt);

}  // namespace resolap

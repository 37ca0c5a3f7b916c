#pragma once

#include <complex>
#include <vector>

#include "resolap/rational.hpp"

namespace resolap {

using cd = std::complex<double>;

// c(w) = (w + 1/w)/2 and s(w) = (w - 1/w)/2 = i c(-iw), w != 0.
cd cmap(cd w);
cd smap(cd w);

// Principal branch sqrt(R e^{iT}) = sqrt(R) e^{iT/2}, T in (-pi, pi).
// Arguments within a 1e-15 band of (-inf, 0] raise map_domain_error.
cd branch_sqrt(cd z);

// c^{-1}(z) = z - sqrt(z+1) sqrt(z-1), into the punctured unit disc;
// z within a band of [-1,1] raises. Real z < -1 is in the domain and is
// handled by oddness (the sqrt product extends across (-inf,-1)).
cd c_inverse(cd z);

// s(c^{-1}(z)) = -sqrt(z+1) sqrt(z-1), same domain handling.
cd s_c_inverse(cd z);

// zeta^+(z) = sqrt(iL/z + 1) sqrt(iL/z - 1). On z = -iv (v > 0) the stated
// one-sided limits are used: sqrt((L/v)^2 - 1) for v <= L, i sqrt(1 - (L/v)^2)
// for v >= L.
cd zeta_plus(const Rational& L_sq, cd z);
cd zeta_plus(double L, cd z);

// Chart inverse: z = sign * i L / sqrt(zeta^2 + 1); zeta must avoid
// i((-inf,-1] u [1,+inf)).
cd chart_inverse(const Rational& L_sq, cd zeta, int sign);
cd chart_inverse(double L, cd zeta, int sign);

struct CoordChange {
    cd zeta_m;
    cd derivative;
};

// Change of chart coordinates between the surfaces labelled by L_l <= L_m,
// for the lower-half-plane charts. zeta_l is the section value, eps_l the
// sheet sign (the effective coordinate is eps_l * zeta_l):
//   zeta_m = eps_m * zeta_m^+(-i L_l / sqrt(zeta_l^2 + 1)),
//   d(zeta_m)/d(zeta_l) = (L_m^2/L_l^2) * zeta_l / zeta_m.
// Raises singular_derivative_error when zeta_m vanishes (|z| = L_m).
CoordChange coord_change(const Rational& L_m_sq, const Rational& L_l_sq,
                         int eps_m, int eps_l, cd zeta_l);

struct SignVector {
    std::vector<int> eps;  // entries +-1, one per branch index 0..N
};

struct ChartPoint {
    Rational branch_L_sq;
    cd zeta;
    int half_plane_sign;  // the +- of the chart domain
};

// z recovered from a chart point; checks the codomain constraint.
cd chart_point_z(const ChartPoint& pt);

}  // namespace resolap

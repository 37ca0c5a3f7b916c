#include "resolap/complexmaps.hpp"

#include <cmath>

#include "resolap/errors.hpp"

namespace resolap {

namespace {
const cd iu(0.0, 1.0);

bool on_real_band(cd z) { return std::abs(z.imag()) <= 1e-15 * std::max(1.0, std::abs(z.real())); }
}  // namespace

cd cmap(cd w) {
    if (w == cd(0.0)) throw map_domain_error("c(w) requires w != 0");
    return (w + 1.0 / w) * 0.5;
}

cd smap(cd w) {
    if (w == cd(0.0)) throw map_domain_error("s(w) requires w != 0");
    return (w - 1.0 / w) * 0.5;
}

cd branch_sqrt(cd z) {
    if (on_real_band(z) && z.real() <= 0.0)
        throw map_domain_error("branch sqrt evaluated on the cut (-inf,0]");
    return std::sqrt(z);
}

cd c_inverse(cd z) {
    if (on_real_band(z)) {
        if (std::abs(z.real()) <= 1.0)
            throw map_domain_error("c^{-1} evaluated on [-1,1]");
        if (z.real() < -1.0) return -c_inverse(-z);  // c is odd
    }
    return z - branch_sqrt(z + 1.0) * branch_sqrt(z - 1.0);
}

cd s_c_inverse(cd z) {
    if (on_real_band(z)) {
        if (std::abs(z.real()) <= 1.0)
            throw map_domain_error("s o c^{-1} evaluated on [-1,1]");
        if (z.real() < -1.0) return -s_c_inverse(-z);  // sign rule
    }
    return -branch_sqrt(z + 1.0) * branch_sqrt(z - 1.0);
}

cd zeta_plus(double L, cd z) {
    if (z == cd(0.0)) throw map_domain_error("zeta^+ undefined at z = 0");
    if (z.real() == 0.0 && z.imag() < 0.0) {
        const double v = -z.imag();
        if (v <= L) return cd(std::sqrt(L * L / (v * v) - 1.0), 0.0);
        return cd(0.0, std::sqrt(1.0 - L * L / (v * v)));
    }
    const cd u = iu * L / z;
    return branch_sqrt(u + 1.0) * branch_sqrt(u - 1.0);
}

cd zeta_plus(const Rational& L_sq, cd z) {
    if (L_sq <= 0) throw parameter_error("L^2 must be positive");
    return zeta_plus(std::sqrt(to_double(L_sq)), z);
}

cd chart_inverse(double L, cd zeta, int sign) {
    if (sign != 1 && sign != -1) throw parameter_error("chart sign must be +-1");
    // codomain: zeta off i((-inf,-1] u [1,+inf)), i.e. zeta^2 + 1 off (-inf,0]
    const cd u = zeta * zeta + 1.0;
    if (on_real_band(u) && u.real() <= 0.0)
        throw map_domain_error("zeta outside the chart codomain");
    return static_cast<double>(sign) * iu * L / std::sqrt(u);
}

cd chart_inverse(const Rational& L_sq, cd zeta, int sign) {
    if (L_sq <= 0) throw parameter_error("L^2 must be positive");
    return chart_inverse(std::sqrt(to_double(L_sq)), zeta, sign);
}

CoordChange coord_change(const Rational& L_m_sq, const Rational& L_l_sq,
                         int eps_m, int eps_l, cd zeta_l) {
    if (L_l_sq > L_m_sq) throw parameter_error("coord_change requires L_l <= L_m");
    if (std::abs(eps_m) != 1 || std::abs(eps_l) != 1) throw parameter_error("eps must be +-1");
    const double Lm = std::sqrt(to_double(L_m_sq));
    const double Ll = std::sqrt(to_double(L_l_sq));
    const cd zl = static_cast<double>(eps_l) * zeta_l;
    const cd z = chart_inverse(Ll, zl, -1);
    CoordChange out;
    out.zeta_m = static_cast<double>(eps_m) * zeta_plus(Lm, z);
    if (std::abs(out.zeta_m) < 1e-6)
        throw singular_derivative_error("chart change singular at |z| = L_m");
    out.derivative = (Lm * Lm) / (Ll * Ll) * zl / out.zeta_m;
    return out;
}

cd chart_point_z(const ChartPoint& pt) {
    return chart_inverse(pt.branch_L_sq, pt.zeta, pt.half_plane_sign);
}

}  // namespace resolap

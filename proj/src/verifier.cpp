#include "resolap/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "resolap/errors.hpp"

namespace resolap {

namespace {

constexpr double PI = std::numbers::pi;
const cd iu(0.0, 1.0);

// compensated accumulator; the parity and refinement checks sit near the
// double roundoff floor, plain summation over 4096 nodes is not enough
struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

struct KahanSumC {
    KahanSum re, im;
    void add(cd z) {
        re.add(z.real());
        im.add(z.imag());
    }
    cd value() const { return {re.s, im.s}; }
};

}  // namespace

SpectralTestFunction SpectralTestFunction::gaussian(double sigma) {
    SpectralTestFunction t;
    t.kind = Kind::Gaussian;
    t.sigma = sigma;
    return t;
}

SpectralTestFunction SpectralTestFunction::even_polynomial(
    std::vector<std::vector<double>> coeffs) {
    SpectralTestFunction t;
    t.kind = Kind::EvenPolynomial;
    t.poly = std::move(coeffs);
    return t;
}

cd SpectralTestFunction::eval(cd mu1, cd mu2) const {
    const cd u = mu1 * mu1, v = mu2 * mu2;
    if (kind == Kind::Gaussian) return std::exp(-sigma * sigma * (u + v));
    cd acc(0.0);
    for (auto ita = poly.rbegin(); ita != poly.rend(); ++ita) {
        cd row(0.0);
        for (auto itb = ita->rbegin(); itb != ita->rend(); ++itb) row = row * v + *itb;
        acc = acc * u + row;
    }
    return acc;
}

KernelContext::KernelContext(ProductSpace p, SpectralTestFunction t, int M, double d)
    : product(std::move(p)), test(std::move(t)), nodes(M), delta(d) {
    if (M < 4 || M % 2 != 0) throw parameter_error("node count must be even and >= 4");
    if (d <= 0) throw parameter_error("residue radius must be positive");
    prof1 = build_profile(product.s1);
    prof2 = build_profile(product.s2);
}

cd psi(const KernelContext& ctx, cd z, cd w) {
    if (w == cd(0.0)) throw map_domain_error("psi requires w != 0");
    const cd cw = cmap(w), cmiw = cmap(-iu * w);
    return ctx.test.eval(z * cw / ctx.product.s1.b(), z * cmiw / ctx.product.s2.b());
}

cd phi(const KernelContext& ctx, cd z, cd w) {
    if (w == cd(0.0)) throw map_domain_error("phi requires w != 0");
    if (z == cd(0.0)) return cd(0.0);  // removable: z^2 beats the q poles at 0
    const cd cw = cmap(w), sw = smap(w), cmiw = cmap(-iu * w);
    cd val = -z * z * cw * (sw / w);
    val *= eval_p(ctx.prof1, z * cw) * eval_q(ctx.prof1, z * cw);
    val *= eval_p(ctx.prof2, z * cmiw) * eval_q(ctx.prof2, z * cmiw);
    return val;
}

namespace {

// smallest |ln(|w0|/r)| over the integrand poles w0 near the circle |w|=r
double pole_clearance(const KernelContext& ctx, cd z, double r) {
    double best = 1e9;
    for (int j = 1; j <= 2; ++j) {
        const DensityProfile& prof = ctx.profile(j);
        if (!prof.has_cot) continue;
        const RankOneSpace& s = prof.space;
        for (int ell = 0;; ++ell) {
            const cd u = iu * s.lattice_L(ell) / z;
            if (std::abs(u) > 60.0) break;
            double mod;
            try {
                mod = std::abs(c_inverse(u));
            } catch (const map_domain_error&) {
                return 0.0;  // pole exactly on the image of the unit circle
            }
            best = std::min(best, std::abs(std::log(mod / r)));
            best = std::min(best, std::abs(std::log(1.0 / (mod * r))));  // reciprocal partner
        }
    }
    return best;
}

cd circle_integral(const KernelContext& ctx, cd z, double r, int M) {
    // midpoint nodes: w = +-1, +-i are removable singularities of the
    // integrand when a rho_beta is an integer; keep nodes off them
    KahanSumC acc;
    for (int k = 0; k < M; ++k) {
        const double th = 2.0 * PI * (k + 0.5) / M;
        const cd w = r * std::exp(iu * th);
        acc.add(psi(ctx, z, w) * phi(ctx, z, w) * iu * w);
    }
    return acc.value() * (2.0 * PI / M);
}

void require_off_cuts(const KernelContext& ctx, cd z) {
    if (ctx.product.extension_class == ExtensionClass::BothEvenHolomorphicLog) return;
    const double L = std::sqrt(to_double(*ctx.product.L_sq));
    if (z.real() == 0.0 && std::abs(z.imag()) >= L)
        throw map_domain_error("z on i((-inf,-L] u [L,inf))");
}

}  // namespace

cd angular_integral(const KernelContext& ctx, cd z, double r, int nodes) {
    if (r <= 0.0) throw parameter_error("contour radius must be positive");
    if (pole_clearance(ctx, z, r) < 25.0 / nodes)
        throw ill_conditioned_error("integrand pole within numerical reach of the contour");
    return circle_integral(ctx, z, r, nodes);
}

cd angular_integral(const KernelContext& ctx, cd z) {
    require_off_cuts(ctx, z);
    return angular_integral(ctx, z, 1.0, ctx.nodes);
}

cd residue_function(const KernelContext& ctx, int factor, int ell, cd z) {
    if (factor != 1 && factor != 2) throw parameter_error("factor must be 1 or 2");
    if (ell < 0) throw parameter_error("ell must be nonnegative");
    const DensityProfile& pj = ctx.profile(factor);
    const DensityProfile& po = ctx.profile(3 - factor);
    if (!pj.has_cot)
        throw empty_lattice_error("residue function needs an odd-multiplicity factor");
    const RankOneSpace& s = pj.space;
    const double L = s.lattice_L(ell);
    if (z == cd(0.0) || (z.real() == 0.0 && std::abs(z.imag()) >= L))
        throw map_domain_error("z on i((-inf,-L] u {0} u [L,inf))");
    const double C = s.b() / PI * L * to_double(p_at_lattice(pj, ell));
    const cd u = iu * L / z;
    const cd w0 = c_inverse(u);
    const cd arg = iu * z * s_c_inverse(u);
    cd val = C * psi(ctx, z, factor == 1 ? w0 : iu * w0) * eval_p(po, arg);
    if (po.has_cot) val *= eval_q(po, arg);
    return val;
}

DeformedIntegral deformed_angular_integral(const KernelContext& ctx, cd z,
                                           std::optional<double> r_opt) {
    require_off_cuts(ctx, z);
    if (z.real() == 0.0)
        throw parameter_error("deformation requires z off the imaginary axis");

    double r;
    if (r_opt) {
        r = *r_opt;
        if (r <= 0.0 || r >= 1.0) throw parameter_error("need 0 < r < 1");
    } else {
        // c(r) midway to the index-count cap at v = |z|
        const double v = std::abs(z);
        double cap = 1e9;
        for (int j = 1; j <= 2; ++j) {
            const RankOneSpace& s = ctx.product.factor(j);
            if (!s.odd_multiplicity()) continue;
            const double rho = to_double(s.rho_beta);
            const double nu = v / s.b();
            if (nu < rho)
                cap = std::min(cap, rho / nu);  // enclose nothing from this factor
            else {
                const double m = std::floor(nu - rho);
                cap = std::min(cap, (rho + m + 0.5) / (rho + m));
            }
        }
        if (cap > 1e8) cap = 2.0;  // both-even: any radius works
        const double c_target = 1.0 + 0.5 * (cap - 1.0);
        r = c_target - std::sqrt(c_target * c_target - 1.0);
    }

    const double cr = (r + 1.0 / r) / 2.0;
    const double sr = std::abs((r - 1.0 / r) / 2.0);

    DeformedIntegral out;
    out.r = r;
    out.enclosed1 = out.enclosed2 = 0;
    cd G(0.0);
    for (int j = 1; j <= 2; ++j) {
        const RankOneSpace& s = ctx.product.factor(j);
        if (!s.odd_multiplicity()) continue;
        for (int ell = 0;; ++ell) {
            const cd u = iu * s.lattice_L(ell) / z;
            const double q = (u.real() / cr) * (u.real() / cr) + (u.imag() / sr) * (u.imag() / sr);
            if (std::abs(q - 1.0) < 1e-9)
                throw contour_collision_error("lattice point on the deformed contour image");
            if (q >= 1.0 && std::abs(u) > cr) break;  // outside, and all later ell further out
            if (q < 1.0) {
                G += residue_function(ctx, j, ell, z);
                (j == 1 ? out.enclosed1 : out.enclosed2)++;
            }
        }
    }
    // each enclosed lattice value contributes both preimages w^+ and w^-
    out.value = angular_integral(ctx, z, r, ctx.nodes) + 2.0 * PI * iu * (2.0 * G);
    return out;
}

cd residue_function_chart(const KernelContext& ctx, int factor, int ell, int sign, cd zeta) {
    if (factor != 1 && factor != 2) throw parameter_error("factor must be 1 or 2");
    if (sign != 1 && sign != -1) throw parameter_error("chart sign must be +-1");
    const DensityProfile& pj = ctx.profile(factor);
    const DensityProfile& po = ctx.profile(3 - factor);
    if (!pj.has_cot)
        throw empty_lattice_error("chart lift needs an odd-multiplicity factor");
    const RankOneSpace& s = pj.space;
    const double L = s.lattice_L(ell);
    const cd A = branch_sqrt(zeta * zeta + 1.0);  // throws off the chart codomain
    const cd z = static_cast<double>(sign) * iu * L / A;
    const cd w = static_cast<double>(sign) * A - zeta;  // iL/z - zeta
    const cd x = -iu * z * zeta;
    cd val = s.b() / PI * L * to_double(p_at_lattice(pj, ell));
    val *= psi(ctx, z, factor == 1 ? w : iu * w);
    val *= eval_p(po, x);
    if (po.has_cot) val *= eval_q(po, x);
    return val;
}

cd numeric_residue(const std::function<cd(cd)>& fn, cd center, double delta, int M,
                   double rtol, double atol) {
    auto ring = [&](double d) {
        KahanSumC acc;
        for (int k = 0; k < M; ++k) {
            const double th = 2.0 * PI * (k + 0.5) / M;
            const cd e = std::exp(iu * th);
            acc.add(fn(center + d * e) * e);
        }
        return acc.value() * (d / M);
    };
    const cd coarse = ring(delta);
    const cd fine = ring(delta / 2.0);
    if (std::abs(coarse - fine) > std::max(atol, rtol * std::abs(fine)))
        throw unreliable_residue_error("residue not stable under delta halving");
    return fine;
}

namespace {

// exact pieces of the continuation residue at the k-th singular value

struct ContinuationSetup {
    Rational z_abs_sq;
    std::vector<std::pair<int, int>> pairs;
    std::vector<Rational> branch_L_sq;                 // ascending, distinct
    std::map<std::pair<int, int>, std::size_t> surface;  // (j,ell) -> branch index
    std::size_t m;                                      // largest with L^2 < |z|^2
};

Resonance resonance_at(const ProductSpace& p, std::size_t k) {
    Rational R = p.rho_X_sq * 2;
    auto cat = enumerate_resonances(p, R);
    while (cat.size() <= k) {
        R *= 2;
        if (R > p.rho_X_sq * 100000) throw parameter_error("resonance index out of range");
        cat = enumerate_resonances(p, R);
    }
    return cat[k];
}

ContinuationSetup continuation_setup(const KernelContext& ctx, std::size_t k) {
    const ProductSpace& p = ctx.product;
    if (p.extension_class != ExtensionClass::BothOddMeromorphic)
        throw parameter_error("continuation residues require both multiplicities odd");
    const Resonance res = resonance_at(p, k);
    ContinuationSetup out;
    out.z_abs_sq = res.z_abs_sq;
    out.pairs = res.pairs;
    for (const BranchPoint& bp : branch_points(p, res.z_abs_sq))
        out.branch_L_sq.push_back(bp.L_sq);
    std::size_t idx = 0;
    for (const BranchPoint& bp : branch_points(p, res.z_abs_sq)) {
        for (const LatticePoint& src : bp.sources) out.surface[{src.factor, src.ell}] = idx;
        ++idx;
    }
    bool found = false;
    for (std::size_t i = 0; i < out.branch_L_sq.size(); ++i)
        if (out.branch_L_sq[i] < out.z_abs_sq) {
            out.m = i;
            found = true;
        }
    if (!found) throw singular_derivative_error("no admissible chart below |z_k|");
    return out;
}

int section_sign(const SignVector& eps, std::size_t idx) {
    if (idx < eps.eps.size()) {
        const int e = eps.eps[idx];
        if (e != 1 && e != -1) throw parameter_error("sign vector entries must be +-1");
        return e;
    }
    return 1;
}

}  // namespace

cd continuation_residue(const KernelContext& ctx, std::size_t k, int eps_m,
                        const SignVector& eps) {
    if (eps_m != 1 && eps_m != -1) throw parameter_error("eps_m must be +-1");
    const ContinuationSetup su = continuation_setup(ctx, k);
    const ProductSpace& p = ctx.product;
    const double zk2 = to_double(su.z_abs_sq);
    const double zk3 = std::pow(zk2, 1.5);
    const double Lm2 = to_double(su.branch_L_sq[su.m]);
    const double D = std::sqrt(zk2 - Lm2);
    cd sum(0.0);
    for (const auto& [l1, l2] : su.pairs) {
        const double L1 = p.s1.lattice_L(l1), L2 = p.s2.lattice_L(l2);
        const int e1 = section_sign(eps, su.surface.at({1, l1}));
        const int e2 = section_sign(eps, su.surface.at({2, l2}));
        const double pp =
            to_double(p_at_lattice(ctx.prof1, l1)) * to_double(p_at_lattice(ctx.prof2, l2));
        const cd W = ctx.test.eval(iu * (to_double(p.s1.rho_beta) + l1),
                                   iu * (to_double(p.s2.rho_beta) + l2));
        sum += static_cast<double>(e1 + e2) * 2.0 * p.s1.b() * p.s2.b() * (L1 * L2 / zk3) * pp * W;
    }
    // the section's own m-component sits in the prefactor; eps_m is the
    // additional chart-orientation sign on top of it
    const int em_sect = section_sign(eps, su.m);
    return static_cast<double>(eps_m * em_sect) * iu * Lm2 / (PI * PI * D) * sum;
}

cd continuation_residue(const KernelContext& ctx, std::size_t k, int eps_m) {
    return continuation_residue(ctx, k, eps_m, SignVector{});
}

std::pair<cd, cd> chart_pole_residues(const KernelContext& ctx, int ell1, int ell2, int sign) {
    const ProductSpace& p = ctx.product;
    if (!p.s1.odd_multiplicity() || !p.s2.odd_multiplicity())
        throw empty_lattice_error("chart pole residues require both multiplicities odd");
    if (sign != 1 && sign != -1) throw parameter_error("chart sign must be +-1");
    const double L1 = p.s1.lattice_L(ell1), L2 = p.s2.lattice_L(ell2);
    const double zk3 = std::pow(L1 * L1 + L2 * L2, 1.5);
    const cd W = ctx.test.eval(iu * (to_double(p.s1.rho_beta) + ell1),
                               iu * (to_double(p.s2.rho_beta) + ell2));
    const cd base = static_cast<double>(sign) * p.s1.b() * p.s2.b() / (iu * PI * PI) *
                    to_double(p_at_lattice(ctx.prof1, ell1)) *
                    to_double(p_at_lattice(ctx.prof2, ell2)) * W;
    return {base * (L1 * L1 * L1) / zk3, base * (L2 * L2 * L2) / zk3};
}

cd continuation_residue_transport(const KernelContext& ctx, std::size_t k, int eps_m,
                                  const SignVector& eps) {
    if (eps_m != 1 && eps_m != -1) throw parameter_error("eps_m must be +-1");
    const ContinuationSetup su = continuation_setup(ctx, k);
    const ProductSpace& p = ctx.product;
    const double zk = std::sqrt(to_double(su.z_abs_sq));
    const double Lm = std::sqrt(to_double(su.branch_L_sq[su.m]));

    // distinct singular lifted functions and their surface data
    std::vector<std::tuple<int, int, double, int>> members;  // (j, ell, L, eps_surface)
    for (const auto& [l1, l2] : su.pairs) {
        for (const auto& [j, l] : {std::pair{1, l1}, std::pair{2, l2}}) {
            bool dup = false;
            for (const auto& [j0, l0, L0, e0] : members)
                if (j0 == j && l0 == l) dup = true;
            if (dup) continue;
            members.emplace_back(j, l, p.factor(j).lattice_L(l),
                                 section_sign(eps, su.surface.at({j, l})));
        }
    }
    const int em_sect = section_sign(eps, su.m);
    const cd zeta_m0 = iu * static_cast<double>(em_sect) * std::sqrt(zk * zk - Lm * Lm) / zk;

    auto singular_part = [&](cd zeta_m) {
        cd tot(0.0);
        for (const auto& [j, l, Ls, es] : members) {
            const cd w2 = (Ls * Ls) / (Lm * Lm) * (zeta_m * zeta_m + 1.0) - 1.0;
            const cd target = iu * static_cast<double>(es) * std::sqrt(zk * zk - Ls * Ls) / zk;
            cd zl = std::sqrt(w2);  // either preimage; pick the sheet continuing the section
            if (std::abs(zl - target) > std::abs(-zl - target)) zl = -zl;
            tot += residue_function_chart(ctx, j, l, -1, zl);
        }
        return 2.0 * tot;
    };
    // stability guard scaled by the no-cancellation magnitude: with flipped
    // section signs the residue itself can vanish while the per-term noise
    // floor stays proportional to the unsigned sum
    double scale = 0.0;
    {
        const double zk3 = zk * zk * zk;
        const double D = std::sqrt(zk * zk - Lm * Lm);
        for (const auto& [l1, l2] : su.pairs) {
            const double L1 = p.s1.lattice_L(l1), L2 = p.s2.lattice_L(l2);
            const double pp = std::abs(to_double(p_at_lattice(ctx.prof1, l1)) *
                                       to_double(p_at_lattice(ctx.prof2, l2)));
            const double W = std::abs(ctx.test.eval(iu * (to_double(p.s1.rho_beta) + l1),
                                                    iu * (to_double(p.s2.rho_beta) + l2)));
            scale += 4.0 * p.s1.b() * p.s2.b() * (L1 * L2 / zk3) * pp * W * Lm * Lm / (PI * PI * D);
        }
    }
    const cd res =
        numeric_residue(singular_part, zeta_m0, ctx.delta, 512, 1e-7, 1e-7 * (1.0 + scale));
    return static_cast<double>(eps_m) * res;
}

HolomorphyReport verify_no_resonance_one_odd(const KernelContext& ctx, const Rational& R_sq) {
    const ProductSpace& p = ctx.product;
    if (p.extension_class != ExtensionClass::OneOddHolomorphic)
        throw parameter_error("holomorphy probe applies to one-odd products only");
    const int jo = p.s1.odd_multiplicity() ? 1 : 2;
    const RankOneSpace& so = p.factor(jo);
    const RankOneSpace& se = p.factor(3 - jo);

    HolomorphyReport rep;
    for (int ell = 0; so.lattice_L_sq(ell) <= R_sq; ++ell) {
        const double Lo = so.lattice_L(ell);
        for (int m = 0; so.lattice_L_sq(ell) + se.lattice_L_sq(m) <= R_sq; ++m) {
            // where the two-odd case would place a pole of this lift
            const double Le = se.lattice_L(m);
            const double zk = std::sqrt(Lo * Lo + Le * Le);
            const cd zeta0 = -iu * Le / zk;
            const cd r = numeric_residue(
                [&](cd zeta) { return residue_function_chart(ctx, jo, ell, -1, zeta); }, zeta0,
                ctx.delta, 256);
            rep.max_residue = std::max(rep.max_residue, std::abs(r));
            ++rep.probes;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// verification suite

namespace {

struct Sampler {
    std::mt19937_64 rng;
    explicit Sampler(std::uint64_t seed) : rng(seed) {}
    double uniform(double a, double b) {
        return a + (b - a) * std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    }
    int pick(int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }
    cd off_axis_z(double vmin, double vmax) {
        const double v = uniform(vmin, vmax);
        const double side = pick(2) == 0 ? 1.0 : -1.0;
        const double th = -PI / 2 + side * uniform(0.18, 0.7);
        return v * std::exp(iu * th);
    }
    cd generic(double scale) {
        return {uniform(-scale, scale), uniform(-scale, scale)};
    }
};

double rel_err(cd a, cd b) { return std::abs(a - b) / std::max(1e-300, std::abs(b)); }

}  // namespace

std::vector<CheckResult> run_verification(const KernelContext& ctx, const VerifyOptions& opt) {
    std::vector<CheckResult> out;
    Sampler smp(opt.seed);
    const ProductSpace& p = ctx.product;
    const bool both_odd = p.extension_class == ExtensionClass::BothOddMeromorphic;
    const bool one_odd = p.extension_class == ExtensionClass::OneOddHolomorphic;
    const int n_pointwise = opt.quick ? 100 : 1000;

    auto push = [&](const std::string& name, const std::string& inputs, double measured,
                    double tol) {
        out.push_back({name, inputs, measured, tol, measured <= tol});
    };

    {  // sign rule of the sqrt product
        double worst = 0.0;
        for (int i = 0; i < n_pointwise; ++i) {
            cd z = smp.generic(3.0);
            if (std::abs(z.imag()) < 1e-3) z += cd(0.0, 0.5);
            worst = std::max(worst, std::abs(s_c_inverse(-z) + s_c_inverse(z)) /
                                        std::max(1.0, std::abs(s_c_inverse(z))));
        }
        push("sign_rule", std::to_string(n_pointwise) + " random z", worst, 1e-13);
    }
    {  // c^{-1} round trip and contraction
        double worst = 0.0;
        for (int i = 0; i < n_pointwise; ++i) {
            cd z = smp.generic(4.0);
            if (std::abs(z.imag()) < 1e-3) z += cd(0.0, 0.4);
            const cd w = c_inverse(z);
            if (std::abs(w) >= 1.0) worst = std::max(worst, 1.0);
            worst = std::max(worst, std::abs(cmap(w) - z) / std::max(1.0, std::abs(z)));
        }
        push("cinverse_roundtrip", std::to_string(n_pointwise) + " random z", worst, 1e-12);
    }
    {  // zeta^+ solves the surface equation
        double worst = 0.0;
        const Rational L_sq = both_odd || one_odd ? *p.L_sq : Rational(1);
        const double L = std::sqrt(to_double(L_sq));
        for (int i = 0; i < n_pointwise; ++i) {
            cd z = smp.generic(3.0 * L);
            if (std::abs(z.real()) < 1e-3 || std::abs(z) < 1e-2) z += cd(0.7 * L, 0.0);
            const cd zt = zeta_plus(L_sq, z);
            const cd u = iu * L / z;
            worst = std::max(worst, std::abs(u * u - 1.0 - zt * zt));
        }
        push("zeta_section_equation", std::to_string(n_pointwise) + " random z", worst, 1e-12);
    }
    {  // ray/circle disjointness at w1 = c^{-1}(iL/z)
        double worst = 1e9;
        const double L = std::sqrt(to_double(p.L_sq.value_or(Rational(1))));
        for (int i = 0; i < n_pointwise; ++i) {
            cd z = smp.off_axis_z(0.3 * L, 3.0 * L);
            const cd w1 = c_inverse(iu * L / z);
            worst = std::min(worst, std::abs((z * cmap(-iu * w1)).real()));
        }
        push("ray_circle_disjointness", std::to_string(n_pointwise) + " random z",
             worst > 1e-10 ? 0.0 : 1.0, 0.5);
    }
    {  // psi/phi parity
        double worst = 0.0;
        for (int i = 0; i < n_pointwise; ++i) {
            const cd z = smp.generic(2.0);
            cd w = smp.generic(1.2);
            if (std::abs(w) < 0.1) w += cd(0.5, 0.3);
            try {
                const double s1 = std::max(1.0, std::abs(psi(ctx, z, w)));
                worst = std::max(worst, std::abs(psi(ctx, -z, w) - psi(ctx, z, w)) / s1);
                worst = std::max(worst, std::abs(psi(ctx, z, -w) - psi(ctx, z, w)) / s1);
                const cd f = phi(ctx, z, w);
                const cd fm = phi(ctx, z, -w), fz = phi(ctx, -z, w);
                const double s2 = std::max({1.0, std::abs(f), std::abs(fm)});
                worst = std::max(worst, std::abs(fm + f) / s2);
                worst = std::max(worst, std::abs(fz - f) / s2);
            } catch (const pole_error&) {
                --i;  // resample
            }
        }
        push("psi_phi_parity", std::to_string(n_pointwise) + " random (z,w)", worst, 1e-13);
    }
    {  // P coefficient parity: odd m_beta -> even polynomial, even -> odd
        double bad = 0.0;
        for (int j = 1; j <= 2; ++j) {
            const DensityProfile& prof = ctx.profile(j);
            for (std::size_t d = 0; d < prof.P.coeff.size(); ++d) {
                const bool must_vanish = prof.has_cot ? (d % 2 == 1) : (d % 2 == 0);
                if (must_vanish && prof.P.coeff[d] != 0) bad += 1.0;
            }
        }
        push("P_coefficient_parity", "both factors, exact", bad, 0.0);
    }
    {  // q parity and evenness of x p q
        double worst = 0.0;
        for (int i = 0; i < n_pointwise; ++i) {
            cd x = smp.generic(3.0);
            if (std::abs(x.real()) < 1e-2) x += cd(0.4, 0.0);
            for (int j = 1; j <= 2; ++j) {
                const DensityProfile& prof = ctx.profile(j);
                try {
                    const cd qp = eval_q(prof, x), qm = eval_q(prof, -x);
                    if (prof.has_cot)
                        worst = std::max(worst,
                                         std::abs(qm + qp) / std::max(1.0, std::abs(qp)));
                    const cd d = x * eval_p(prof, x) * qp;
                    const cd e = d - (-x) * eval_p(prof, -x) * qm;
                    worst = std::max(worst, std::abs(e) / std::max(1.0, std::abs(d)));
                } catch (const pole_error&) {
                }
            }
        }
        push("q_parity", std::to_string(n_pointwise) + " random x", worst, 1e-12);
    }
    {  // gamma-function oracle for the Plancherel density
        double worst = 0.0;
        for (int j = 1; j <= 2; ++j) {
            const RankOneSpace& s = p.factor(j);
            double ref = 0.0;
            for (const double lam : {0.5, 1.0, 2.0, 4.0, 8.0}) {
                const double ratio =
                    density_gamma(s, lam) / std::abs(density_polyform(s, lam));
                if (ref == 0.0) ref = ratio;
                worst = std::max(worst, std::abs(ratio - ref) / ref);
            }
        }
        push("plancherel_gamma_oracle", "lambda in {1/2,1,2,4,8}, both factors", worst, 1e-9);
    }
    if (p.extension_class != ExtensionClass::BothEvenHolomorphicLog) {
        // F evenness
        const double L = std::sqrt(to_double(*p.L_sq));
        double worst = 0.0;
        const int nF = opt.quick ? 5 : 25;
        for (int i = 0; i < nF; ++i) {
            const cd z = smp.off_axis_z(0.3 * L, 1.8 * L);
            try {
                const cd a = angular_integral(ctx, z), b = angular_integral(ctx, -z);
                worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a)));
            } catch (const ill_conditioned_error&) {
                --i;
            }
        }
        push("F_evenness", std::to_string(nF) + " random z", worst, 1e-12);

        {  // |F(z)/z^2| stays bounded as z -> 0 (it may well decay)
            const cd dir = std::exp(iu * PI / 4.0);
            const double r1 = std::abs(angular_integral(ctx, 1e-2 * dir)) / 1e-4;
            const double r2 = std::abs(angular_integral(ctx, 1e-3 * dir)) / 1e-6;
            push("F_small_z_bound", "z = t e^{i pi/4}, t in {1e-2,1e-3}",
                 r2 / (2.0 * r1 + 1.0), 1.0);
        }
        {  // node refinement
            double worst = 0.0;
            const int nQ = opt.quick ? 3 : 10;
            for (int i = 0; i < nQ; ++i) {
                const cd z = smp.off_axis_z(0.3 * L, 1.6 * L);
                try {
                    const cd a = angular_integral(ctx, z, 1.0, ctx.nodes);
                    const cd b = angular_integral(ctx, z, 1.0, 2 * ctx.nodes);
                    worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
                } catch (const ill_conditioned_error&) {
                    --i;
                }
            }
            push("quadrature_node_refinement", std::to_string(nQ) + " random z", worst, 1e-11);
        }
        {  // contour deformation identity
            double worst = 0.0;
            const int nD = opt.quick ? 4 : 20;
            int made = 0, guard = 0;
            while (made < nD && guard < 500 * nD) {
                ++guard;
                const cd z = smp.off_axis_z(0.45 * L, L + 2.5 * std::max(p.s1.b(), p.s2.b()));
                try {
                    const DeformedIntegral d = deformed_angular_integral(ctx, z);
                    if (pole_clearance(ctx, z, d.r) < 50.0 / ctx.nodes) continue;
                    if (pole_clearance(ctx, z, 1.0) < 50.0 / ctx.nodes) continue;
                    const cd direct = angular_integral(ctx, z);
                    worst = std::max(worst, rel_err(d.value, direct));
                    ++made;
                } catch (const contour_collision_error&) {
                } catch (const ill_conditioned_error&) {
                }
            }
            push("deformation_identity", std::to_string(made) + " admissible (z,r) samples",
                 worst, opt.deformation_tol.value_or(1e-8));
        }
    }
    if (both_odd || one_odd) {  // index count vs brute force, at b^2 = 1 where v stays rational
        const int nI = opt.quick ? 50 : 200;
        int mismatches = 0, done = 0, guard = 0;
        while (done < nI && guard < 100 * nI) {
            ++guard;
            RankOneSpace s = p.factor(1 + smp.pick(2));
            if (!s.odd_multiplicity()) continue;
            s.b_sq = 1;
            const Rational v = s.rho_beta + Rational(smp.pick(129), 16);
            const Rational cr(101 + smp.pick(44), 100);
            int N;
            try {
                N = index_bound(s, v, cr);
            } catch (const case_hypothesis_error&) {
                continue;
            }
            int brute = -1;
            for (int ell = 0; s.rho_beta + ell < cr * v; ++ell) brute = ell;
            if (N != brute) ++mismatches;
            ++done;
        }
        push("index_bound_bruteforce", std::to_string(done) + " random (space,v,c(r))",
             mismatches, 0.0);
    }
    {  // coordinate-change derivative vs central finite difference
        double worst = 0.0;
        const int nC = opt.quick ? 20 : 100;
        int done = 0, guard = 0;
        while (done < nC && guard < 100 * nC) {
            ++guard;
            const Rational Ll_sq(1 + smp.pick(8), 1 + smp.pick(3));
            const Rational Lm_sq = Ll_sq * Rational(1 + smp.pick(4), 1);
            const int em = smp.pick(2) == 0 ? 1 : -1;
            const int el = smp.pick(2) == 0 ? 1 : -1;
            const cd zeta = smp.generic(1.5) + cd(0.0, 0.0);
            const double h = 1e-6;
            try {
                const CoordChange cc = coord_change(Lm_sq, Ll_sq, em, el, zeta);
                if (std::abs(cc.zeta_m) < 5e-2) continue;  // stay away from singular radii
                const cd fp = coord_change(Lm_sq, Ll_sq, em, el, zeta + h).zeta_m;
                const cd fm = coord_change(Lm_sq, Ll_sq, em, el, zeta - h).zeta_m;
                const cd fd = (fp - fm) / (2.0 * h) * static_cast<double>(el);
                // derivative is w.r.t. the effective coordinate el*zeta
                worst = std::max(worst, rel_err(fd, cc.derivative));
                ++done;
            } catch (const map_domain_error&) {
            } catch (const singular_derivative_error&) {
            }
        }
        push("coord_change_derivative", std::to_string(done) + " random chart points", worst,
             1e-6);
    }
    if (both_odd) {
        {  // chart expression restricted to the section reproduces G
            double worst = 0.0;
            const int nS = opt.quick ? 10 : 50;
            for (int j = 1; j <= 2; ++j)
                for (int ell = 0; ell <= 2; ++ell) {
                    const double L = p.factor(j).lattice_L(ell);
                    int done = 0, guard = 0;
                    while (done < nS && guard < 50 * nS) {
                        ++guard;
                        const cd z = smp.off_axis_z(0.3 * L, 2.5 * L);
                        try {
                            const int sgn = z.imag() > 0 ? 1 : -1;
                            const cd zt = zeta_plus(L, z);
                            const cd a = residue_function_chart(ctx, j, ell, sgn, zt);
                            const cd b = residue_function(ctx, j, ell, z);
                            worst = std::max(worst, rel_err(a, b));
                            ++done;
                        } catch (const pole_error&) {
                        } catch (const map_domain_error&) {
                        }
                    }
                }
            push("chart_section_consistency", "factors x ell<=2, " + std::to_string(nS) +
                 " z each", worst, 1e-10);
        }
        {  // closed chart residues vs numeric extraction, with delta stability
            double worst = 0.0;
            const int lmax = opt.quick ? 1 : 2;
            for (int l1 = 0; l1 <= lmax; ++l1)
                for (int l2 = 0; l2 <= lmax; ++l2) {
                    const auto [r1, r2] = chart_pole_residues(ctx, l1, l2, -1);
                    const double L1 = p.s1.lattice_L(l1), L2 = p.s2.lattice_L(l2);
                    const double zk = std::sqrt(L1 * L1 + L2 * L2);
                    const cd n1 = numeric_residue(
                        [&](cd zt) { return residue_function_chart(ctx, 1, l1, -1, zt); },
                        -iu * L2 / zk, ctx.delta, 512);
                    const cd n2 = numeric_residue(
                        [&](cd zt) { return residue_function_chart(ctx, 2, l2, -1, zt); },
                        -iu * L1 / zk, ctx.delta, 512);
                    worst = std::max(worst, rel_err(n1, r1));
                    worst = std::max(worst, rel_err(n2, r2));
                }
            push("chart_pole_residues", "all pairs ell_i <= " + std::to_string(lmax), worst,
                 1e-6);
        }
        {  // continuation residue vs chart transport
            double worst = 0.0;
            const std::size_t kmax = opt.quick ? 1 : 3;
            for (std::size_t k = 0; k <= kmax; ++k) {
                try {
                    const cd closed = continuation_residue(ctx, k, 1);
                    const cd oracle = continuation_residue_transport(ctx, k, 1);
                    worst = std::max(worst, rel_err(oracle, closed));
                } catch (const singular_derivative_error&) {
                }
            }
            push("continuation_residue_transport", "k <= " + std::to_string(kmax), worst, 1e-6);
        }
    }
    if (one_odd) {
        const HolomorphyReport rep = verify_no_resonance_one_odd(ctx, Rational(10));
        push("one_odd_holomorphy", std::to_string(rep.probes) + " probes up to R^2=10",
             rep.max_residue, 1e-8);
    }
    return out;
}

}  // namespace resolap

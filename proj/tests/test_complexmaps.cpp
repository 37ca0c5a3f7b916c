#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "resolap/complexmaps.hpp"
#include "resolap/errors.hpp"

using namespace resolap;
using namespace std::complex_literals;

TEST_SUITE_BEGIN("complexmaps");

namespace {
const double PI = std::acos(-1.0);

cd rand_off_segment(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    cd z;
    do {
        z = cd(u(rng), u(rng));
    } while (std::abs(z.imag()) < 1e-3 && std::abs(z.real()) < 1.5);
    return z;
}
}  // namespace

TEST_CASE("c and s basics") {
    CHECK(std::abs(cmap(cd(1.0)) - cd(1.0)) == 0.0);
    CHECK(std::abs(cmap(cd(0.5)) - cd(1.25)) < 1e-16);
    const cd w = std::exp(1.0i * (PI / 3.0));
    CHECK(std::abs(smap(w) - cd(0.0, std::sqrt(3.0) / 2.0)) < 1e-15);
    CHECK_THROWS_AS(cmap(cd(0.0)), map_domain_error);
    // s(w) = i c(-iw)
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const cd v = rand_off_segment(rng) + cd(0.0, 0.2);
        CHECK(std::abs(smap(v) - 1.0i * cmap(-1.0i * v)) < 1e-14 * std::abs(smap(v)));
    }
}

TEST_CASE("branch sqrt") {
    CHECK(std::abs(branch_sqrt(cd(4.0)) - cd(2.0)) < 1e-15);
    CHECK(std::abs(branch_sqrt(1.0i) - std::exp(1.0i * PI / 4.0)) < 1e-15);
    CHECK_THROWS_AS(branch_sqrt(cd(-1.0, 0.0)), map_domain_error);
    CHECK_THROWS_AS(branch_sqrt(cd(-2.0, 1e-17)), map_domain_error);
    CHECK(std::abs(branch_sqrt(cd(-1.0, 1e-6)) - 1.0i) < 1e-5);
}

TEST_CASE("c_inverse examples and round trip") {
    CHECK(std::abs(c_inverse(cd(1.25)) - cd(0.5)) < 1e-15);
    CHECK(std::abs(c_inverse(cd(-1.25)) - cd(-0.5)) < 1e-15);
    const cd w = 0.3 * std::exp(0.7i);
    CHECK(std::abs(c_inverse(cmap(w)) - w) < 1e-14);
    CHECK_THROWS_AS(c_inverse(cd(0.3)), map_domain_error);
    CHECK_THROWS_AS(c_inverse(cd(1.0)), map_domain_error);

    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        const cd z = rand_off_segment(rng);
        const cd w1 = c_inverse(z);
        CHECK(std::abs(w1) < 1.0);
        CHECK(std::abs(w1) > 0.0);
        CHECK(std::abs(cmap(w1) - z) < 1e-12 * std::max(1.0, std::abs(z)));
    }
}

TEST_CASE("s o c^{-1} closed form and sign rule") {
    CHECK(std::abs(s_c_inverse(cd(1.25)) - cd(-0.75)) < 1e-15);
    CHECK(std::abs(s_c_inverse(cd(-1.25)) - cd(0.75)) < 1e-15);
    CHECK(std::abs(smap(c_inverse(2.0i)) - s_c_inverse(2.0i)) < 1e-14);

    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        const cd z = rand_off_segment(rng);
        CHECK(std::abs(s_c_inverse(-z) + s_c_inverse(z)) <
              1e-13 * std::max(1.0, std::abs(s_c_inverse(z))));
        CHECK(std::abs(smap(c_inverse(z)) - s_c_inverse(z)) <
              1e-13 * std::max(1.0, std::abs(s_c_inverse(z))));
    }
}

TEST_CASE("zeta^+ boundary values on the negative imaginary axis") {
    const Rational one(1);
    CHECK(std::abs(zeta_plus(one, cd(0.0, -0.5)) - cd(std::sqrt(3.0))) < 1e-15);
    CHECK(std::abs(zeta_plus(one, cd(0.0, -1.0))) == 0.0);
    CHECK(std::abs(zeta_plus(one, cd(0.0, -2.0)) - cd(0.0, std::sqrt(3.0) / 2.0)) < 1e-15);
    CHECK_THROWS_AS(zeta_plus(one, cd(0.0)), map_domain_error);
    CHECK_THROWS_AS(zeta_plus(one, cd(0.0, 2.0)), map_domain_error);  // on the upper cut
}

TEST_CASE("zeta^+ solves the defining equation off the axis") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 1000; ++i) {
        cd z(u(rng), u(rng));
        if (std::abs(z.real()) < 1e-3) z += cd(0.5, 0.0);
        const cd zt = zeta_plus(2.0, z);
        const cd v = 1.0i * 2.0 / z;
        CHECK(std::abs(v * v - 1.0 - zt * zt) < 1e-12 * std::max(1.0, std::norm(v)));
    }
}

TEST_CASE("chart inverse") {
    CHECK(std::abs(chart_inverse(Rational(1), cd(0.0), -1) - cd(0.0, -1.0)) < 1e-15);
    CHECK(std::abs(chart_inverse(Rational(1), cd(0.0, std::sqrt(3.0) / 2.0), -1) -
                   cd(0.0, -2.0)) < 1e-14);
    CHECK(std::abs(chart_inverse(Rational(4), cd(std::sqrt(3.0)), 1) - cd(0.0, 1.0)) < 1e-14);
    CHECK_THROWS_AS(chart_inverse(Rational(1), cd(0.0, 1.0), 1), map_domain_error);
    // chart composed with the section round-trips
    const cd z(0.4, -1.3);
    const cd zt = zeta_plus(Rational(4), z);
    CHECK(std::abs(chart_inverse(Rational(4), zt, -1) - z) < 1e-13);
}

TEST_CASE("coordinate change: identity, example, sign flip") {
    // same chart: identity map with unit derivative
    const cd zeta = zeta_plus(1.0, cd(0.0, -1.7));
    const CoordChange id = coord_change(Rational(1), Rational(1), 1, 1, zeta);
    CHECK(std::abs(id.zeta_m - zeta) < 1e-13);
    CHECK(std::abs(id.derivative - cd(1.0)) < 1e-12);

    // L_m = 2, L_l = 1, |z|^2 = 5: derivative 4 * sqrt(4)/sqrt(1) = 8
    const cd zl = 1.0i * std::sqrt(5.0 - 1.0) / std::sqrt(5.0);
    const CoordChange cc = coord_change(Rational(4), Rational(1), 1, 1, zl);
    CHECK(std::abs(cc.zeta_m - 1.0i * std::sqrt(5.0 - 4.0) / std::sqrt(5.0)) < 1e-13);
    CHECK(std::abs(cc.derivative - cd(8.0)) < 1e-12);

    const CoordChange flipped = coord_change(Rational(4), Rational(1), 1, -1, zl);
    CHECK(std::abs(flipped.derivative + cc.derivative) < 1e-12);

    // derivative pole at |z| = L_m
    const cd at_branch = 1.0i * std::sqrt(4.0 - 1.0) / 2.0;  // |z| = 2 = L_m
    CHECK_THROWS_AS(coord_change(Rational(4), Rational(1), 1, 1, at_branch),
                    singular_derivative_error);
    CHECK_THROWS_AS(coord_change(Rational(1), Rational(4), 1, 1, zl), parameter_error);
}

TEST_CASE("coordinate change derivative matches finite differences") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    int done = 0;
    while (done < 100) {
        const cd zeta(u(rng), u(rng));
        const Rational Ll(1 + static_cast<int>(rng() % 6));
        const Rational Lm = Ll * static_cast<int>(1 + rng() % 3);
        try {
            const CoordChange cc = coord_change(Lm, Ll, 1, 1, zeta);
            if (std::abs(cc.zeta_m) < 5e-2) continue;
            const double h = 1e-6;
            const cd fd = (coord_change(Lm, Ll, 1, 1, zeta + h).zeta_m -
                           coord_change(Lm, Ll, 1, 1, zeta - h).zeta_m) /
                          (2.0 * h);
            CHECK(std::abs(fd - cc.derivative) < 1e-6 * std::max(1.0, std::abs(cc.derivative)));
            ++done;
        } catch (const map_domain_error&) {
        } catch (const singular_derivative_error&) {
        }
    }
}

TEST_CASE("chart point recovers z in the stated half plane") {
    const ChartPoint pt{Rational(9, 4), cd(0.2, -0.3), -1};
    const cd z = chart_point_z(pt);
    CHECK(z.imag() < 0.0);
    CHECK(std::abs(1.0i * 1.5 / z - branch_sqrt(pt.zeta * pt.zeta + 1.0) * (-1.0)) < 1e-13);
}

TEST_SUITE_END();

#include <doctest.h>

#include "resolap/errors.hpp"
#include "resolap/spaces.hpp"

using namespace resolap;

TEST_SUITE_BEGIN("spaces");

TEST_CASE("classification table rows") {
    const RankOneSpace su = build_space(Family::SU, 2);
    CHECK(su.m_half == 2);
    CHECK(su.m_full == 1);
    CHECK(su.rho_beta == Rational(1));

    const RankOneSpace sp = build_space(Family::Sp, 2);
    CHECK(sp.m_half == 4);
    CHECK(sp.m_full == 3);
    CHECK(sp.rho_beta == Rational(5, 2));

    const RankOneSpace so = build_space(Family::SO_even, 1);
    CHECK(so.m_half == 0);
    CHECK(so.m_full == 1);
    CHECK(so.rho_beta == Rational(1, 2));

    const RankOneSpace f4 = build_space(Family::F4, 99);  // n ignored
    CHECK(f4.m_half == 8);
    CHECK(f4.m_full == 7);
    CHECK(f4.rho_beta == Rational(11, 2));

    CHECK(build_space(Family::SO_odd, 1).m_full == 2);
    CHECK(build_space(Family::SO_odd, 1).rho_beta == Rational(1));
}

TEST_CASE("2 rho = m + m_half/2 across the table") {
    for (const Family f : {Family::SO_odd, Family::SO_even, Family::SU, Family::Sp, Family::F4}) {
        const int n0 = (f == Family::SU || f == Family::Sp) ? 2 : 1;
        for (int n = n0; n <= 6; ++n) {
            const RankOneSpace s = build_space(f, n);
            CHECK(Rational(2) * s.rho_beta == Rational(2 * s.m_full + s.m_half, 2));
            CHECK(s.m_half % 2 == 0);
            if (s.m_half > 0) CHECK(s.m_full % 2 == 1);
        }
    }
}

TEST_CASE("parameter range errors") {
    CHECK_THROWS_AS(build_space(Family::SU, 1), parameter_error);
    CHECK_THROWS_AS(build_space(Family::Sp, 1), parameter_error);
    CHECK_THROWS_AS(build_space(Family::SO_odd, 0), parameter_error);
    CHECK_THROWS_AS(build_space(Family::SU, 2, Rational(-1)), parameter_error);
}

TEST_CASE("products and extension classes") {
    const RankOneSpace su = build_space(Family::SU, 2);
    const ProductSpace p1 = build_product(su, su);
    CHECK(p1.rho_X_sq == Rational(2));
    CHECK(p1.L_sq == Rational(1));
    CHECK(p1.extension_class == ExtensionClass::BothOddMeromorphic);

    const RankOneSpace so31 = build_space(Family::SO_odd, 1);
    const ProductSpace p2 = build_product(su, so31);
    CHECK(p2.extension_class == ExtensionClass::OneOddHolomorphic);

    const RankOneSpace so51 = build_space(Family::SO_odd, 2);
    const ProductSpace p3 = build_product(so31, so51);
    CHECK(p3.extension_class == ExtensionClass::BothEvenHolomorphicLog);
    CHECK(!p3.L_sq.has_value());
}

TEST_CASE("rho_X^2 is exact and dominates L^2 in the both-odd case") {
    const std::vector<RankOneSpace> odd = {
        build_space(Family::SO_even, 1), build_space(Family::SO_even, 2),
        build_space(Family::SU, 2),      build_space(Family::SU, 3),
        build_space(Family::Sp, 2),      build_space(Family::F4, 0)};
    for (const auto& a : odd)
        for (const auto& b : odd) {
            const ProductSpace p = build_product(a, b);
            CHECK(p.rho_X_sq ==
                  a.b_sq * a.rho_beta * a.rho_beta + b.b_sq * b.rho_beta * b.rho_beta);
            REQUIRE(p.L_sq.has_value());
            CHECK(*p.L_sq < p.rho_X_sq);
        }
}

TEST_CASE("classify_extension statements") {
    const ProductSpace meromorphic =
        build_product(build_space(Family::SU, 2), build_space(Family::Sp, 2));
    const ExtensionReport r1 = classify_extension(meromorphic);
    CHECK(r1.cls == ExtensionClass::BothOddMeromorphic);
    CHECK(*meromorphic.L_sq == Rational(1));  // min(1, 25/4)

    const ExtensionReport r2 = classify_extension(
        build_product(build_space(Family::SU, 2), build_space(Family::SO_odd, 1)));
    CHECK(r2.statement.find("no resonances") != std::string::npos);
}

TEST_CASE("specifier parsing") {
    CHECK(parse_space("SU(2,1)").family == Family::SU);
    CHECK(parse_space("Sp(3,1)").rho_beta == Rational(7, 2));
    const RankOneSpace so4 = parse_space("SO(4,1)");
    CHECK(so4.m_full == 3);
    CHECK(so4.rho_beta == Rational(3, 2));
    const RankOneSpace so5 = parse_space("SO(5,1)");
    CHECK(so5.family == Family::SO_odd);
    CHECK(so5.rho_beta == Rational(2));
    CHECK(parse_space("F4").m_full == 7);

    const RankOneSpace scaled = parse_space("SU(2,1)@b2=3/2");
    CHECK(scaled.b_sq == Rational(3, 2));
    CHECK(scaled.lattice_L_sq(1) == Rational(6));  // 3/2 * 4

    CHECK_THROWS_AS(parse_space("SU(1,1)"), parameter_error);
    CHECK_THROWS_AS(parse_space("SO(1,1)"), parameter_error);
    CHECK_THROWS_AS(parse_space("SX(2,1)"), parameter_error);
    CHECK_THROWS_AS(parse_space("SU(2,2)"), parameter_error);
    CHECK_THROWS_AS(parse_space("SU(2,1)@b2=0"), parameter_error);
    CHECK_THROWS_AS(parse_space("SU(2,1)@bb=1"), parameter_error);
    // errors carry a position
    try {
        parse_space("SU(x,1)");
        CHECK(false);
    } catch (const parameter_error& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("round-trip of names") {
    for (const char* s : {"SU(2,1)", "Sp(2,1)", "SO(4,1)", "SO(5,1)", "F4"})
        CHECK(parse_space(s).name() == s);
}

TEST_SUITE_END();

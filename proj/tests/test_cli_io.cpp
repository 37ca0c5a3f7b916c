#include <doctest.h>

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "resolap/catalog.hpp"
#include "resolap/errors.hpp"

using namespace resolap;

TEST_SUITE_BEGIN("cli_io");

namespace {
ProductSpace SUxSU() { return build_product(parse_space("SU(2,1)"), parse_space("SU(2,1)")); }
}  // namespace

TEST_CASE("catalog json: content and determinism") {
    const Catalog c = build_catalog(SUxSU(), Rational(25));
    const std::string a = catalog_json(c);
    const std::string b = catalog_json(build_catalog(SUxSU(), Rational(25)));
    CHECK(a == b);  // byte-identical for identical config

    const auto j = nlohmann::json::parse(a);
    CHECK(j.at("rho_X_sq") == "2");
    CHECK(j.at("extension_class") == "both_odd_meromorphic");
    CHECK(j.at("resonances").size() == 9);
    CHECK(j.at("resonances").at(0).at("z_abs_sq") == "2");
    CHECK(j.at("resonances").at(0).at("z") == "-i*sqrt(2)");
    CHECK(j.at("resonances").at(8).at("pairs").size() == 2);
    CHECK(j.at("resonances").at(1).at("C").at(0).at("q1") == "2");
    CHECK(j.at("branch_points").at(0).at("sources").size() == 2);
    CHECK(!j.contains("note"));
}

TEST_CASE("catalog json: no-resonance classes carry a note") {
    const ProductSpace p = build_product(parse_space("SU(2,1)"), parse_space("SO(5,1)"));
    const Catalog c = build_catalog(p, Rational(25));
    const auto j = nlohmann::json::parse(catalog_json(c));
    CHECK(j.at("resonances").empty());
    CHECK(std::string(j.at("note")).find("no resonances") != std::string::npos);
    CHECK(!j.at("branch_points").empty());  // odd factor still contributes branch points

    // both-odd product with nonunit rho's: first entry 1 + 9/4
    const ProductSpace q = build_product(parse_space("SU(2,1)"), parse_space("SO(4,1)"));
    const auto jq =
        nlohmann::json::parse(catalog_json(build_catalog(q, Rational(25))));
    CHECK(jq.at("resonances").at(0).at("z_abs_sq") == "13/4");
}

TEST_CASE("catalog round trip re-derives z from the pairs") {
    const std::string a = catalog_json(build_catalog(SUxSU(), Rational(25)));
    CHECK(catalog_json_roundtrip(a) == a);
}

TEST_CASE("csv rows: one per (resonance, pair)") {
    const std::string csv = catalog_csv(build_catalog(SUxSU(), Rational(25)));
    std::size_t rows = 0;
    for (const char ch : csv) rows += ch == '\n';
    CHECK(rows == 1 + 15);  // header + sum of |S_k| = 1+2+1+2+2+2+1+2+2
    CHECK(csv.find("29/4") == std::string::npos);
    CHECK(csv.find("z_abs_sq,z,ell1,ell2,C_q1,C_q2") == 0);
}

TEST_CASE("svg marker counts") {
    const std::string svg = catalog_svg(build_catalog(SUxSU(), Rational(25)));
    std::size_t hollow = 0, filled = 0, pos = 0;
    while ((pos = svg.find("fill=\"none\"", pos)) != std::string::npos) {
        ++hollow;
        pos += 10;
    }
    pos = 0;
    while ((pos = svg.find("fill=\"black\"", pos)) != std::string::npos) {
        ++filled;
        pos += 10;
    }
    CHECK(hollow == 4);   // branch L^2 in {1,4,9,16}; 25 sits on the rim
    CHECK(filled == 9);   // resonances
    CHECK(svg == catalog_svg(build_catalog(SUxSU(), Rational(25))));  // deterministic bytes

    // one-odd: hollow markers only
    const ProductSpace p = build_product(parse_space("SU(2,1)"), parse_space("SO(3,1)"));
    const std::string svg2 = catalog_svg(build_catalog(p, Rational(25)));
    CHECK(svg2.find("fill=\"black\"") == std::string::npos);
    CHECK(svg2.find("fill=\"none\"") != std::string::npos);

    // both-odd below the first resonance: hollow only as well
    const std::string svg3 = catalog_svg(build_catalog(SUxSU(), Rational(3, 2)));
    CHECK(svg3.find("fill=\"black\"") == std::string::npos);
}

TEST_CASE("describe json carries exact P coefficients") {
    const auto j = nlohmann::json::parse(describe_json(parse_space("Sp(2,1)")));
    CHECK(j.at("rho_beta") == "5/2");
    CHECK(j.at("P_coefficients").size() == 7);
    CHECK(j.at("P_coefficients").at(0) == "-9/64");
    CHECK(j.at("P_coefficients").at(2) == "19/16");
    CHECK(j.at("has_cot") == true);
    const auto j2 = nlohmann::json::parse(describe_json(parse_space("SO(4,1)")));
    CHECK(j2.at("m_full") == 3);
    CHECK(j2.at("rho_beta") == "3/2");
}

TEST_CASE("config file parsing") {
    const std::string path = "resolap_test_config.tmp";
    {
        std::ofstream f(path);
        f << "# comment line\n"
          << "space1 = SU(2,1)\n"
          << "max_r2=25\n"
          << "  seed =  99   # trailing comment\n"
          << "\n";
    }
    const auto cfg = parse_config_file(path);
    CHECK(cfg.at("space1") == "SU(2,1)");
    CHECK(cfg.at("max_r2") == "25");
    CHECK(cfg.at("seed") == "99");
    {
        std::ofstream f(path);
        f << "not a key value line\n";
    }
    CHECK_THROWS_AS(parse_config_file(path), parameter_error);
    std::remove(path.c_str());
    CHECK_THROWS_AS(parse_config_file("definitely_missing.cfg"), parameter_error);
}

TEST_CASE("verification report json") {
    std::vector<CheckResult> checks = {{"alpha", "x", 1e-12, 1e-9, true},
                                       {"beta", "y", 2.0, 1.0, false}};
    const auto j = nlohmann::json::parse(verification_report_json(SUxSU(), checks, 7));
    CHECK(j.at("seed") == 7);
    CHECK(j.at("checks").size() == 2);
    CHECK(j.at("checks").at(1).at("pass") == false);
    CHECK(j.at("all_pass") == false);
}

TEST_CASE("residues report") {
    const std::string txt = residues_report_text(SUxSU(), Rational(5));
    CHECK(txt.find("k=0") != std::string::npos);
    CHECK(txt.find("(0,1)") != std::string::npos);
    const auto j = nlohmann::json::parse(residues_report_json(SUxSU(), Rational(5)));
    CHECK(j.at("resonances").at(1).at("rank_summands") == 2);
    const ProductSpace p = build_product(parse_space("SU(2,1)"), parse_space("SO(5,1)"));
    CHECK(residues_report_text(p, Rational(5)).find("no resonances") != std::string::npos);
}

TEST_SUITE_END();

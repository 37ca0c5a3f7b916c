#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "resolap/catalog.hpp"
#include "resolap/errors.hpp"
#include "resolap/spaces.hpp"
#include "resolap/verifier.hpp"

namespace {

using namespace resolap;

struct Options {
    std::string space1, space2;
    std::string b2_1 = "1", b2_2 = "1";
    std::string max_r2 = "25";
    std::string format;
    std::string out;
    std::string config;
    int nodes = 2048;
    double tol = 0.0;
    std::uint64_t seed = 12345;
    double sigma = 1.0;
    bool quick = false;
};

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw parameter_error("cannot open output file: " + o.out);
    f << text;
}

RankOneSpace space_from(const std::string& spec, const std::string& b2) {
    if (spec.empty()) throw parameter_error("missing space specifier");
    if (spec.find('@') != std::string::npos) return parse_space(spec);
    return parse_space(spec + "@b2=" + b2);
}

ProductSpace product_from(const Options& o) {
    if (o.space1.empty() || o.space2.empty())
        throw parameter_error("this command needs --space1 and --space2");
    return build_product(space_from(o.space1, o.b2_1), space_from(o.space2, o.b2_2));
}

std::string pick_format(const Options& o, const std::string& dflt) {
    return o.format.empty() ? dflt : o.format;
}

int cmd_describe(const Options& o) {
    const std::string fmt = pick_format(o, "text");
    if (!o.space1.empty() && !o.space2.empty()) {
        const ProductSpace p = product_from(o);
        emit(o, fmt == "json" ? describe_json(p) : describe_text(p));
        return 0;
    }
    const RankOneSpace s = space_from(o.space1, o.b2_1);
    if (fmt == "json")
        emit(o, describe_json(s));
    else if (fmt == "text")
        emit(o, describe_text(s));
    else
        throw parameter_error("describe supports --format json|text");
    return 0;
}

int cmd_resonances(const Options& o) {
    const ProductSpace p = product_from(o);
    const Catalog c = build_catalog(p, parse_rational(o.max_r2));
    const std::string fmt = pick_format(o, "json");
    if (fmt == "json")
        emit(o, catalog_json(c));
    else if (fmt == "csv")
        emit(o, catalog_csv(c));
    else if (fmt == "text")
        emit(o, catalog_text(c));
    else if (fmt == "svg")
        emit(o, catalog_svg(c));
    else
        throw parameter_error("resonances supports --format json|csv|text|svg");
    return 0;
}

int cmd_residues(const Options& o) {
    const ProductSpace p = product_from(o);
    const Rational R = parse_rational(o.max_r2);
    const std::string fmt = pick_format(o, "text");
    if (fmt == "json")
        emit(o, residues_report_json(p, R));
    else if (fmt == "text")
        emit(o, residues_report_text(p, R));
    else
        throw parameter_error("residues supports --format json|text");
    return 0;
}

int cmd_verify(const Options& o) {
    const ProductSpace p = product_from(o);
    KernelContext ctx(p, SpectralTestFunction::gaussian(o.sigma), o.nodes);
    VerifyOptions vo;
    vo.seed = o.seed;
    vo.quick = o.quick;
    if (o.tol > 0.0) vo.deformation_tol = o.tol;
    const auto checks = run_verification(ctx, vo);
    emit(o, verification_report_json(p, checks, o.seed));
    for (const auto& c : checks)
        if (!c.pass) return 1;
    return 0;
}

int cmd_plot(const Options& o) {
    const ProductSpace p = product_from(o);
    const Catalog c = build_catalog(p, parse_rational(o.max_r2));
    emit(o, catalog_svg(c));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"resonances and residue operators of the Laplacian on products of two "
                 "rank-one symmetric spaces"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    auto* op_space1 = app.add_option("--space1", o.space1, "first factor, e.g. SU(2,1)");
    auto* op_space2 = app.add_option("--space2", o.space2, "second factor");
    auto* op_b21 = app.add_option("--b2-1", o.b2_1, "b^2 of the first factor (rational)");
    auto* op_b22 = app.add_option("--b2-2", o.b2_2, "b^2 of the second factor (rational)");
    auto* op_maxr2 = app.add_option("--max-r2", o.max_r2, "|z|^2 bound (rational)");
    auto* op_format = app.add_option("--format", o.format, "json|csv|text|svg");
    auto* op_nodes = app.add_option("--nodes", o.nodes, "quadrature node count");
    auto* op_tol = app.add_option("--tol", o.tol, "deformation-check tolerance override");
    auto* op_seed = app.add_option("--seed", o.seed, "seed for randomized checks");
    auto* op_out = app.add_option("--out", o.out, "output file (default stdout)");
    auto* op_sigma = app.add_option("--sigma", o.sigma, "gaussian test-function width");
    auto* op_quick = app.add_flag("--quick", o.quick, "reduced sample counts");
    app.add_option("--config", o.config, "key=value config file (flags take precedence)");

    auto* sub_describe = app.add_subcommand("describe", "table data, P, lattice, class");
    auto* sub_resonances = app.add_subcommand("resonances", "resonance catalog");
    auto* sub_residues = app.add_subcommand("residues", "residue-operator decompositions");
    auto* sub_verify = app.add_subcommand("verify", "run the verification suite");
    auto* sub_plot = app.add_subcommand("plot", "axis diagram (SVG)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!o.config.empty()) {
            const auto cfg = parse_config_file(o.config);
            auto apply = [&](const char* key, CLI::Option* opt, auto& target) {
                const auto it = cfg.find(key);
                if (it == cfg.end() || opt->count() > 0) return;
                std::istringstream is(it->second);
                is >> target;
                if (is.fail()) throw parameter_error(std::string("bad config value for ") + key);
            };
            apply("space1", op_space1, o.space1);
            apply("space2", op_space2, o.space2);
            apply("b2_1", op_b21, o.b2_1);
            apply("b2_2", op_b22, o.b2_2);
            apply("max_r2", op_maxr2, o.max_r2);
            apply("format", op_format, o.format);
            apply("nodes", op_nodes, o.nodes);
            apply("tol", op_tol, o.tol);
            apply("seed", op_seed, o.seed);
            apply("out", op_out, o.out);
            apply("sigma", op_sigma, o.sigma);
            int quick_flag = 0;
            apply("quick", op_quick, quick_flag);
            if (quick_flag) o.quick = true;
        }
        if (sub_describe->parsed()) return cmd_describe(o);
        if (sub_resonances->parsed()) return cmd_resonances(o);
        if (sub_residues->parsed()) return cmd_residues(o);
        if (sub_verify->parsed()) return cmd_verify(o);
        if (sub_plot->parsed()) return cmd_plot(o);
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

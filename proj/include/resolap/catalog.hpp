#pragma once

#include <map>
#include <string>
#include <vector>

#include "resolap/rational.hpp"
#include "resolap/resonances.hpp"
#include "resolap/spaces.hpp"
#include "resolap/verifier.hpp"

namespace resolap {

// One-space description (multiplicities, rho, P, lattice prefix) as JSON or
// text; exact rationals are serialized as "p/q" strings.
std::string describe_json(const RankOneSpace& s);
std::string describe_json(const ProductSpace& p);
std::string describe_text(const RankOneSpace& s);
std::string describe_text(const ProductSpace& p);

struct Catalog {
    ProductSpace product;
    Rational max_r2;
    std::vector<BranchPoint> branch;
    std::vector<Resonance> resonances;
    std::string note;  // non-empty for the no-resonance classes
};

Catalog build_catalog(const ProductSpace& p, const Rational& R_sq);

std::string catalog_json(const Catalog& c);
std::string catalog_csv(const Catalog& c);
std::string catalog_text(const Catalog& c);
std::string catalog_svg(const Catalog& c);

// Round-trip support: re-derive every z_abs_sq from the "pairs" arrays of a
// serialized catalog and re-serialize. Byte-identical for valid input.
std::string catalog_json_roundtrip(const std::string& json_text);

std::string verification_report_json(const ProductSpace& p,
                                     const std::vector<CheckResult>& checks,
                                     std::uint64_t seed);

// Residue-operator decomposition report for all resonances within R^2.
std::string residues_report_text(const ProductSpace& p, const Rational& R_sq);
std::string residues_report_json(const ProductSpace& p, const Rational& R_sq);

// key=value configuration file ('#' comments); throws parameter_error.
std::map<std::string, std::string> parse_config_file(const std::string& path);

}  // namespace resolap

#include "resolap/catalog.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "resolap/errors.hpp"
#include "resolap/plancherel.hpp"

namespace resolap {

using json = nlohmann::ordered_json;

namespace {

json space_json(const RankOneSpace& s) {
    json j;
    j["space"] = s.name();
    j["family"] = family_name(s.family);
    if (s.family != Family::F4) j["n"] = s.n;
    j["m_half"] = s.m_half;
    j["m_full"] = s.m_full;
    j["rho_beta"] = to_frac_string(s.rho_beta);
    j["b_sq"] = to_frac_string(s.b_sq);
    const RationalPolynomial P = build_P(s);
    json coeffs = json::array();
    for (const auto& c : P.coeff) coeffs.push_back(to_frac_string(c));
    j["P_coefficients"] = coeffs;
    j["has_cot"] = s.odd_multiplicity();
    json lat = json::array();
    if (s.odd_multiplicity())
        for (int ell = 0; ell < 5; ++ell) lat.push_back(to_frac_string(s.lattice_L_sq(ell)));
    j["lattice_L_sq_prefix"] = lat;
    return j;
}

json product_json_header(const ProductSpace& p) {
    json j;
    j["space1"] = p.s1.name();
    j["space2"] = p.s2.name();
    j["b2_1"] = to_frac_string(p.s1.b_sq);
    j["b2_2"] = to_frac_string(p.s2.b_sq);
    j["rho_X_sq"] = to_frac_string(p.rho_X_sq);
    j["L_sq"] = p.L_sq ? to_frac_string(*p.L_sq) : "inf";
    j["extension_class"] = extension_class_name(p.extension_class);
    return j;
}

std::string z_string(const Rational& z_abs_sq) {
    return "-i*sqrt(" + to_frac_string(z_abs_sq) + ")";
}

json resonance_json(const Resonance& r) {
    json e;
    e["z_abs_sq"] = to_frac_string(r.z_abs_sq);
    e["z"] = z_string(r.z_abs_sq);
    json pairs = json::array();
    for (const auto& [l1, l2] : r.pairs) pairs.push_back(json::array({l1, l2}));
    e["pairs"] = pairs;
    json Cs = json::array();
    for (const auto& s : r.summands) {
        json c;
        c["q1"] = to_frac_string(s.C.q1);
        c["q2"] = to_frac_string(s.C.q2);
        Cs.push_back(c);
    }
    e["C"] = Cs;
    json ws = json::array();
    for (const auto& s : r.summands) ws.push_back(json::array({s.ell1, s.ell2}));
    e["weights"] = ws;
    return e;
}

}  // namespace

std::string describe_json(const RankOneSpace& s) { return space_json(s).dump(2) + "\n"; }

std::string describe_json(const ProductSpace& p) {
    json j;
    j["space1"] = space_json(p.s1);
    j["space2"] = space_json(p.s2);
    j["rho_X_sq"] = to_frac_string(p.rho_X_sq);
    j["L_sq"] = p.L_sq ? to_frac_string(*p.L_sq) : "inf";
    const ExtensionReport rep = classify_extension(p);
    j["extension_class"] = extension_class_name(rep.cls);
    j["statement"] = rep.statement;
    return j.dump(2) + "\n";
}

std::string describe_text(const RankOneSpace& s) {
    std::ostringstream os;
    os << s.name() << ": m_{beta/2} = " << s.m_half << ", m_beta = " << s.m_full
       << ", rho_beta = " << to_frac_string(s.rho_beta) << ", b^2 = " << to_frac_string(s.b_sq)
       << "\n";
    const RationalPolynomial P = build_P(s);
    os << "  P coefficients (ascending): ";
    for (std::size_t i = 0; i < P.coeff.size(); ++i)
        os << (i ? ", " : "") << to_frac_string(P.coeff[i]);
    os << "\n  Q: " << (s.odd_multiplicity() ? "cot(pi(x - rho_beta))" : "1") << "\n";
    if (s.odd_multiplicity()) {
        os << "  L_ell^2 lattice prefix: ";
        for (int ell = 0; ell < 5; ++ell)
            os << (ell ? ", " : "") << to_frac_string(s.lattice_L_sq(ell));
        os << "\n";
    }
    return os.str();
}

std::string describe_text(const ProductSpace& p) {
    std::ostringstream os;
    os << describe_text(p.s1) << describe_text(p.s2);
    const ExtensionReport rep = classify_extension(p);
    os << "product: rho_X^2 = " << to_frac_string(p.rho_X_sq) << ", L^2 = "
       << (p.L_sq ? to_frac_string(*p.L_sq) : "inf") << "\n"
       << "class: " << extension_class_name(rep.cls) << "\n"
       << rep.statement << "\n";
    return os.str();
}

Catalog build_catalog(const ProductSpace& p, const Rational& R_sq) {
    if (R_sq <= 0) throw parameter_error("R^2 must be positive");
    Catalog c;
    c.product = p;
    c.max_r2 = R_sq;
    if (p.extension_class != ExtensionClass::BothEvenHolomorphicLog)
        c.branch = branch_points(p, R_sq);
    c.resonances = enumerate_resonances(p, R_sq);
    if (p.extension_class != ExtensionClass::BothOddMeromorphic)
        c.note = "no resonances: " + classify_extension(p).statement;
    return c;
}

std::string catalog_json(const Catalog& c) {
    json j = product_json_header(c.product);
    j["max_r2"] = to_frac_string(c.max_r2);
    if (!c.note.empty()) j["note"] = c.note;
    json bps = json::array();
    for (const auto& bp : c.branch) {
        json b;
        b["L_sq"] = to_frac_string(bp.L_sq);
        json src = json::array();
        for (const auto& s : bp.sources) {
            json e;
            e["factor"] = s.factor;
            e["ell"] = s.ell;
            src.push_back(e);
        }
        b["sources"] = src;
        bps.push_back(b);
    }
    j["branch_points"] = bps;
    json rs = json::array();
    for (const auto& r : c.resonances) rs.push_back(resonance_json(r));
    j["resonances"] = rs;
    return j.dump(2) + "\n";
}

std::string catalog_csv(const Catalog& c) {
    std::ostringstream os;
    os << "z_abs_sq,z,ell1,ell2,C_q1,C_q2\n";
    for (const auto& r : c.resonances)
        for (const auto& s : r.summands)
            os << to_frac_string(r.z_abs_sq) << "," << z_string(r.z_abs_sq) << "," << s.ell1
               << "," << s.ell2 << "," << to_frac_string(s.C.q1) << ","
               << to_frac_string(s.C.q2) << "\n";
    return os.str();
}

std::string catalog_text(const Catalog& c) {
    std::ostringstream os;
    os << c.product.s1.name() << " x " << c.product.s2.name()
       << ", |z|^2 <= " << to_frac_string(c.max_r2) << "\n";
    if (!c.note.empty()) os << c.note << "\n";
    os << "branch points (L^2): ";
    for (std::size_t i = 0; i < c.branch.size(); ++i)
        os << (i ? ", " : "") << to_frac_string(c.branch[i].L_sq);
    os << "\n";
    for (const auto& r : c.resonances) {
        os << "z = " << z_string(r.z_abs_sq) << "  |S_k| = " << r.pairs.size() << "  pairs:";
        for (const auto& [a, b] : r.pairs) os << " (" << a << "," << b << ")";
        os << "\n";
    }
    return os.str();
}

std::string catalog_svg(const Catalog& c) {
    // one axis diagram: negative imaginary axis downward, branch points as
    // hollow circles (L^2 < R^2), resonances filled and sized by |S_k|
    const double R = std::sqrt(to_double(c.max_r2));
    const int width = 220, height = 640, margin = 40;
    const double scale = (height - 2.0 * margin) / R;
    char buf[256];
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    const double x0 = width / 2.0;
    std::snprintf(buf, sizeof buf,
                  "  <line x1=\"%.4f\" y1=\"%.4f\" x2=\"%.4f\" y2=\"%.4f\" "
                  "stroke=\"black\" stroke-width=\"1\"/>\n",
                  x0, static_cast<double>(margin), x0, static_cast<double>(height - margin));
    os << buf;
    os << "  <text x=\"" << x0 + 8 << "\" y=\"" << margin - 8 << "\" font-size=\"12\">0</text>\n";
    for (const auto& bp : c.branch) {
        if (!(bp.L_sq < c.max_r2)) continue;
        const double y = margin + std::sqrt(to_double(bp.L_sq)) * scale;
        std::snprintf(buf, sizeof buf,
                      "  <circle cx=\"%.4f\" cy=\"%.4f\" r=\"4\" fill=\"none\" "
                      "stroke=\"black\" stroke-width=\"1.2\"/>\n",
                      x0, y);
        os << buf;
    }
    for (const auto& r : c.resonances) {
        const double y = margin + std::sqrt(to_double(r.z_abs_sq)) * scale;
        const double rad = 2.5 + 1.5 * (static_cast<double>(r.pairs.size()) - 1.0);
        std::snprintf(buf, sizeof buf,
                      "  <circle cx=\"%.4f\" cy=\"%.4f\" r=\"%.4f\" fill=\"black\"/>\n", x0, y,
                      rad);
        os << buf;
    }
    os << "</svg>\n";
    return os.str();
}

std::string catalog_json_roundtrip(const std::string& json_text) {
    json j = json::parse(json_text);
    const RankOneSpace s1 = parse_space(std::string(j.at("space1")) + "@b2=" +
                                        std::string(j.at("b2_1")));
    const RankOneSpace s2 = parse_space(std::string(j.at("space2")) + "@b2=" +
                                        std::string(j.at("b2_2")));
    const ProductSpace p = build_product(s1, s2);
    for (auto& entry : j.at("resonances")) {
        const auto& pair0 = entry.at("pairs").at(0);
        const Rational rebuilt = s1.lattice_L_sq(pair0.at(0).get<int>()) +
                                 s2.lattice_L_sq(pair0.at(1).get<int>());
        entry["z_abs_sq"] = to_frac_string(rebuilt);
        entry["z"] = z_string(rebuilt);
    }
    (void)p;
    return j.dump(2) + "\n";
}

std::string verification_report_json(const ProductSpace& p,
                                     const std::vector<CheckResult>& checks,
                                     std::uint64_t seed) {
    json j = product_json_header(p);
    j["seed"] = seed;
    bool all = true;
    json arr = json::array();
    for (const auto& c : checks) {
        json e;
        e["name"] = c.name;
        e["inputs"] = c.inputs;
        e["measured"] = c.measured;
        e["tolerance"] = c.tolerance;
        e["pass"] = c.pass;
        arr.push_back(e);
        all = all && c.pass;
    }
    j["checks"] = arr;
    j["all_pass"] = all;
    return j.dump(2) + "\n";
}

std::string residues_report_text(const ProductSpace& p, const Rational& R_sq) {
    std::ostringstream os;
    const auto cat = enumerate_resonances(p, R_sq);
    if (cat.empty()) {
        os << "no resonances: " << classify_extension(p).statement << "\n";
        return os.str();
    }
    for (std::size_t k = 0; k < cat.size(); ++k) {
        const auto& r = cat[k];
        os << "k=" << k << "  z = " << z_string(r.z_abs_sq) << "  rank summands: "
           << r.pairs.size() << "\n";
        for (const auto& s : r.summands)
            os << "  weight (" << s.ell1 << "," << s.ell2 << ")  C = "
               << to_frac_string(s.C.q1) << "*b1 + " << to_frac_string(s.C.q2) << "*b2"
               << "  (~" << s.C.value() << ")\n";
    }
    return os.str();
}

std::string residues_report_json(const ProductSpace& p, const Rational& R_sq) {
    json j = product_json_header(p);
    j["max_r2"] = to_frac_string(R_sq);
    json arr = json::array();
    const auto cat = enumerate_resonances(p, R_sq);
    for (std::size_t k = 0; k < cat.size(); ++k) {
        json e = resonance_json(cat[k]);
        e["k"] = k;
        e["rank_summands"] = cat[k].pairs.size();
        arr.push_back(e);
    }
    j["resonances"] = arr;
    if (cat.empty()) j["note"] = "no resonances: " + classify_extension(p).statement;
    return j.dump(2) + "\n";
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parameter_error("cannot open config file: " + path);
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto ltrim = line.find_first_not_of(" \t\r");
        if (ltrim == std::string::npos) continue;
        auto rtrim = line.find_last_not_of(" \t\r");
        line = line.substr(ltrim, rtrim - ltrim + 1);
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw parameter_error("config line " + std::to_string(lineno) +
                                  ": expected key=value");
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t");
            const auto b = s.find_last_not_of(" \t");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

}  // namespace resolap

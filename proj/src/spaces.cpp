#include "resolap/spaces.hpp"

#include <cctype>

#include "resolap/errors.hpp"

namespace resolap {

std::string family_name(Family f) {
    switch (f) {
        case Family::SO_odd: return "SO_odd";
        case Family::SO_even: return "SO_even";
        case Family::SU: return "SU";
        case Family::Sp: return "Sp";
        case Family::F4: return "F4";
    }
    return "?";
}

std::string RankOneSpace::name() const {
    switch (family) {
        case Family::SO_odd: return "SO(" + std::to_string(2 * n + 1) + ",1)";
        case Family::SO_even: return "SO(" + std::to_string(2 * n) + ",1)";
        case Family::SU: return "SU(" + std::to_string(n) + ",1)";
        case Family::Sp: return "Sp(" + std::to_string(n) + ",1)";
        case Family::F4: return "F4";
    }
    return "?";
}

RankOneSpace build_space(Family family, int n, const Rational& b_sq) {
    if (b_sq <= 0) throw parameter_error("b^2 must be positive");
    RankOneSpace s;
    s.family = family;
    s.n = n;
    s.b_sq = b_sq;
    const Rational half(1, 2);
    switch (family) {
        case Family::SO_odd:  // SO0(2n+1,1)
            if (n < 1) throw parameter_error("SO0(2n+1,1) requires n >= 1");
            s.m_half = 0; s.m_full = 2 * n; s.rho_beta = n;
            break;
        case Family::SO_even:  // SO0(2n,1)
            if (n < 1) throw parameter_error("SO0(2n,1) requires n >= 1");
            s.m_half = 0; s.m_full = 2 * n - 1; s.rho_beta = Rational(2 * n - 1) * half;
            break;
        case Family::SU:
            if (n < 2) throw parameter_error("SU(n,1) requires n >= 2");
            s.m_half = 2 * (n - 1); s.m_full = 1; s.rho_beta = Rational(n) * half;
            break;
        case Family::Sp:
            if (n < 2) throw parameter_error("Sp(n,1) requires n >= 2");
            s.m_half = 4 * (n - 1); s.m_full = 3; s.rho_beta = Rational(2 * n + 1) * half;
            break;
        case Family::F4:  // singleton; n ignored
            s.n = 0;
            s.m_half = 8; s.m_full = 7; s.rho_beta = Rational(11) * half;
            break;
    }
    // 2 rho_beta = m_full + m_half/2, a positive integer
    if (Rational(2) * s.rho_beta != Rational(2 * s.m_full + s.m_half) / 2)
        throw std::logic_error("classification table row inconsistent");
    return s;
}

ProductSpace build_product(const RankOneSpace& s1, const RankOneSpace& s2) {
    ProductSpace p;
    p.s1 = s1;
    p.s2 = s2;
    p.rho_X_sq = s1.b_sq * s1.rho_beta * s1.rho_beta + s2.b_sq * s2.rho_beta * s2.rho_beta;
    const bool o1 = s1.odd_multiplicity(), o2 = s2.odd_multiplicity();
    if (o1 && o2) {
        p.extension_class = ExtensionClass::BothOddMeromorphic;
        p.L_sq = std::min(s1.lattice_L_sq(0), s2.lattice_L_sq(0));
    } else if (o1 || o2) {
        p.extension_class = ExtensionClass::OneOddHolomorphic;
        p.L_sq = o1 ? s1.lattice_L_sq(0) : s2.lattice_L_sq(0);
    } else {
        p.extension_class = ExtensionClass::BothEvenHolomorphicLog;
        p.L_sq = std::nullopt;
    }
    return p;
}

std::string extension_class_name(ExtensionClass c) {
    switch (c) {
        case ExtensionClass::BothEvenHolomorphicLog: return "both_even_holomorphic_log";
        case ExtensionClass::OneOddHolomorphic: return "one_odd_holomorphic";
        case ExtensionClass::BothOddMeromorphic: return "both_odd_meromorphic";
    }
    return "?";
}

ExtensionReport classify_extension(const ProductSpace& p) {
    ExtensionReport r;
    r.cls = p.extension_class;
    switch (p.extension_class) {
        case ExtensionClass::BothOddMeromorphic:
            r.statement = "meromorphic lift with at most simple poles on i(-inf,-L], L^2 = " +
                          to_frac_string(*p.L_sq) + "; first resonance at |z|^2 = " +
                          to_frac_string(p.rho_X_sq);
            break;
        case ExtensionClass::OneOddHolomorphic:
            r.statement = "holomorphic lift across the negative imaginary axis; no resonances";
            break;
        case ExtensionClass::BothEvenHolomorphicLog:
            r.statement = "holomorphic extension to a logarithmic surface branched at 0; "
                          "no resonances";
            break;
    }
    return r;
}

namespace {

[[noreturn]] void parse_fail(std::string_view spec, std::size_t pos, const std::string& why) {
    throw parameter_error("bad space specifier \"" + std::string(spec) + "\" at position " +
                          std::to_string(pos) + ": " + why);
}

}  // namespace

RankOneSpace parse_space(std::string_view spec) {
    std::string_view body = spec;
    Rational b_sq(1);
    if (const auto at = spec.find('@'); at != std::string_view::npos) {
        body = spec.substr(0, at);
        std::string_view opt = spec.substr(at + 1);
        if (opt.substr(0, 3) != "b2=") parse_fail(spec, at + 1, "expected b2=<rational>");
        try {
            b_sq = parse_rational(opt.substr(3));
        } catch (const std::invalid_argument& e) {
            parse_fail(spec, at + 4, e.what());
        }
        if (b_sq <= 0) parse_fail(spec, at + 4, "b2 must be positive");
    }

    if (body == "F4" || body == "F4(-20)") return build_space(Family::F4, 0, b_sq);

    std::size_t i = 0;
    while (i < body.size() && std::isalpha(static_cast<unsigned char>(body[i]))) ++i;
    const std::string_view fam = body.substr(0, i);
    if (i >= body.size() || body[i] != '(') parse_fail(spec, i, "expected '('");
    std::size_t j = i + 1, digits0 = j;
    int k = 0;
    while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) {
        k = 10 * k + (body[j] - '0');
        ++j;
    }
    if (j == digits0) parse_fail(spec, j, "expected integer");
    if (body.substr(j) != ",1)") parse_fail(spec, j, "expected \",1)\"");

    if (fam == "SU") return build_space(Family::SU, k, b_sq);
    if (fam == "Sp") return build_space(Family::Sp, k, b_sq);
    if (fam == "SO") {
        if (k < 2) parse_fail(spec, digits0, "SO(k,1) requires k >= 2");
        return k % 2 == 0 ? build_space(Family::SO_even, k / 2, b_sq)
                          : build_space(Family::SO_odd, (k - 1) / 2, b_sq);
    }
    parse_fail(spec, 0, "unknown family \"" + std::string(fam) + "\"");
}

}  // namespace resolap

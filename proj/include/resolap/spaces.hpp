#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "resolap/rational.hpp"

namespace resolap {

// Rows of the rank-one classification table. SO_odd is SO0(2n+1,1) (even root
// multiplicity 2n), SO_even is SO0(2n,1) (odd multiplicity 2n-1).
enum class Family { SO_odd, SO_even, SU, Sp, F4 };

std::string family_name(Family f);

struct RankOneSpace {
    Family family;
    int n;             // family parameter (ignored for F4)
    int m_half;        // multiplicity of beta/2
    int m_full;        // multiplicity of beta
    Rational rho_beta; // (m_full + m_half/2)/2, in (1/2)Z
    Rational b_sq;     // <beta,beta>

    bool odd_multiplicity() const { return m_full % 2 != 0; }
    double b() const { return std::sqrt(to_double(b_sq)); }
    // L_{j,ell}^2 = b^2 (rho + ell)^2, exact
    Rational lattice_L_sq(int ell) const {
        Rational t = rho_beta + ell;
        return b_sq * t * t;
    }
    double lattice_L(int ell) const { return std::sqrt(to_double(lattice_L_sq(ell))); }
    std::string name() const;  // "SU(2,1)", "SO(4,1)", "F4", ...
};

RankOneSpace build_space(Family family, int n, const Rational& b_sq = Rational(1));

enum class ExtensionClass { BothEvenHolomorphicLog, OneOddHolomorphic, BothOddMeromorphic };

std::string extension_class_name(ExtensionClass c);

struct ProductSpace {
    RankOneSpace s1, s2;
    Rational rho_X_sq;              // b1^2 rho1^2 + b2^2 rho2^2
    std::optional<Rational> L_sq;   // min over odd factors of b^2 rho^2; nullopt = +inf
    ExtensionClass extension_class;

    const RankOneSpace& factor(int j) const { return j == 1 ? s1 : s2; }
};

ProductSpace build_product(const RankOneSpace& s1, const RankOneSpace& s2);

struct ExtensionReport {
    ExtensionClass cls;
    std::string statement;  // one line: where poles can occur
};

ExtensionReport classify_extension(const ProductSpace& p);

// Space specifier strings: "SU(2,1)", "Sp(3,1)", "SO(4,1)", "SO(5,1)", "F4",
// optionally suffixed "@b2=<rational>". Throws parameter_error with the
// offending position in the message.
RankOneSpace parse_space(std::string_view spec);

}  // namespace resolap

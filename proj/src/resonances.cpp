#include "resolap/resonances.hpp"

#include <algorithm>
#include <map>

#include "resolap/errors.hpp"

namespace resolap {

QuadraticNumber QuadraticNumber::operator+(const QuadraticNumber& o) const {
    if (b1_sq != o.b1_sq || b2_sq != o.b2_sq)
        throw parameter_error("QuadraticNumber basis mismatch");
    return {q1 + o.q1, q2 + o.q2, b1_sq, b2_sq};
}

QuadraticNumber QuadraticNumber::scaled(const Rational& f) const {
    return {q1 * f, q2 * f, b1_sq, b2_sq};
}

int QuadraticNumber::sign() const {
    const int s1 = q1.sign(), s2 = q2.sign();
    if (s1 == 0) return s2;
    if (s2 == 0 || s1 == s2) return s1;
    // opposite signs: q1 sqrt(a) + q2 sqrt(b) has the sign of the larger square
    const Rational lhs = q1 * q1 * b1_sq;  // (q1 sqrt(a))^2
    const Rational rhs = q2 * q2 * b2_sq;
    if (lhs == rhs) return 0;
    return lhs > rhs ? s1 : s2;
}

LatticePoint lattice_point(const ProductSpace& p, int factor, int ell) {
    if (factor != 1 && factor != 2) throw parameter_error("factor must be 1 or 2");
    if (ell < 0) throw parameter_error("ell must be nonnegative");
    const RankOneSpace& s = p.factor(factor);
    if (!s.odd_multiplicity())
        throw empty_lattice_error("factor " + std::to_string(factor) +
                                  " has even multiplicity: empty lattice");
    return {factor, ell, s.lattice_L_sq(ell)};
}

std::vector<BranchPoint> branch_points(const ProductSpace& p, const Rational& R_sq) {
    if (p.extension_class == ExtensionClass::BothEvenHolomorphicLog)
        throw parameter_error("both factors have even multiplicity: no branch points");
    std::map<Rational, std::vector<LatticePoint>> merged;
    for (int j = 1; j <= 2; ++j) {
        const RankOneSpace& s = p.factor(j);
        if (!s.odd_multiplicity()) continue;
        for (int ell = 0; s.lattice_L_sq(ell) <= R_sq; ++ell)
            merged[s.lattice_L_sq(ell)].push_back({j, ell, s.lattice_L_sq(ell)});
    }
    std::vector<BranchPoint> out;
    out.reserve(merged.size());
    for (auto& [L_sq, sources] : merged) out.push_back({L_sq, std::move(sources)});
    return out;
}

std::vector<Resonance> enumerate_resonances(const ProductSpace& p, const Rational& R_sq) {
    if (p.extension_class != ExtensionClass::BothOddMeromorphic) return {};
    std::map<Rational, std::vector<std::pair<int, int>>> groups;
    for (int l1 = 0; p.s1.lattice_L_sq(l1) <= R_sq; ++l1) {
        const Rational a = p.s1.lattice_L_sq(l1);
        for (int l2 = 0; a + p.s2.lattice_L_sq(l2) <= R_sq; ++l2)
            groups[a + p.s2.lattice_L_sq(l2)].push_back({l1, l2});
    }
    std::vector<Resonance> out;
    out.reserve(groups.size());
    for (auto& [key, pairs] : groups) {
        std::sort(pairs.begin(), pairs.end());
        Resonance r;
        r.z_abs_sq = key;
        r.pairs = pairs;
        for (const auto& [l1, l2] : pairs)
            r.summands.push_back({l1, l2, residue_constant(p, l1, l2)});
        out.push_back(std::move(r));
    }
    return out;
}

QuadraticNumber residue_constant(const ProductSpace& p, int ell1, int ell2) {
    if (!p.s1.odd_multiplicity() || !p.s2.odd_multiplicity())
        throw empty_lattice_error("residue constants require both multiplicities odd");
    if (ell1 < 0 || ell2 < 0) throw parameter_error("ell must be nonnegative");
    const Rational pp = p_at_lattice(p.s1, ell1) * p_at_lattice(p.s2, ell2);
    const Rational r1 = p.s1.rho_beta + ell1;
    const Rational r2 = p.s2.rho_beta + ell2;
    // b1 L2/L1 + b2 L1/L2 = b2 (rho2+l2)/(rho1+l1) * ... : coefficient of b1 is
    // pp (rho1+l1)/(rho2+l2), of b2 is pp (rho2+l2)/(rho1+l1)
    return {pp * r1 / r2, pp * r2 / r1, p.s1.b_sq, p.s2.b_sq};
}

DecompositionReport residue_summands(const ProductSpace& p, std::size_t k) {
    if (p.extension_class != ExtensionClass::BothOddMeromorphic)
        throw parameter_error("no resonances for this extension class");
    Rational R = p.rho_X_sq * 2;
    std::vector<Resonance> cat = enumerate_resonances(p, R);
    while (cat.size() <= k) {
        R *= 2;
        if (R > p.rho_X_sq * 100000) throw parameter_error("resonance index out of range");
        cat = enumerate_resonances(p, R);
    }
    const Resonance& r = cat[k];
    return {r.z_abs_sq, r.pairs.size(), r.summands};
}

int index_bound(const RankOneSpace& s, const Rational& v, const Rational& cr) {
    if (cr <= 1) throw parameter_error("c(r) > 1 required");
    if (v * v < s.b_sq * s.rho_beta * s.rho_beta)
        throw case_hypothesis_error("index bound requires v >= b rho");
    const BigInt nu_floor = floor_over_sqrt(v, s.b_sq);          // floor(v/b)
    const Rational cr2v2 = cr * cr * v * v;                      // (c(r) v)^2
    // c(r) < t/nu  <=>  c(r)^2 v^2 < t^2 b^2   (all positive)
    auto cr_below = [&](const Rational& t) { return cr2v2 < t * t * s.b_sq; };

    if (denominator(s.rho_beta) == 1) {
        if (!cr_below(Rational(nu_floor + 1)))
            throw case_hypothesis_error("need c(r) < (floor(nu)+1)/nu");
        return (Rational(nu_floor) - s.rho_beta).convert_to<int>();
    }
    // rho in Z + 1/2
    const Rational rho_floor = s.rho_beta - Rational(1, 2);
    const Rational half_up = Rational(nu_floor) + Rational(1, 2);
    // floor(nu) + 1/2 <= nu  <=>  (floor(nu)+1/2)^2 b^2 <= v^2
    if (half_up * half_up * s.b_sq <= v * v) {
        if (!cr_below(Rational(nu_floor + 1)))
            throw case_hypothesis_error("need c(r) < (floor(nu)+1)/nu");
        return (Rational(nu_floor) - rho_floor).convert_to<int>();
    }
    if (!cr_below(half_up))
        throw case_hypothesis_error("need c(r) < (floor(nu)+1/2)/nu");
    return (Rational(nu_floor) - rho_floor - 1).convert_to<int>();
}

}  // namespace resolap

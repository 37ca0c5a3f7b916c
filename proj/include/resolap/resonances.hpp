#pragma once

#include <utility>
#include <vector>

#include "resolap/plancherel.hpp"
#include "resolap/rational.hpp"
#include "resolap/spaces.hpp"

namespace resolap {

struct LatticePoint {
    int factor;      // 1 or 2
    int ell;         // nonnegative
    Rational L_sq;   // b_j^2 (rho_j + ell)^2
};

struct BranchPoint {
    Rational L_sq;
    std::vector<LatticePoint> sources;  // one or two, merged on coincidence
};

// Exact value q1 * sqrt(b1^2) + q2 * sqrt(b2^2).
struct QuadraticNumber {
    Rational q1, q2;
    Rational b1_sq, b2_sq;

    double value() const {
        return to_double(q1) * std::sqrt(to_double(b1_sq)) +
               to_double(q2) * std::sqrt(to_double(b2_sq));
    }
    QuadraticNumber operator+(const QuadraticNumber& o) const;
    QuadraticNumber scaled(const Rational& f) const;
    int sign() const;  // exact: -1, 0, +1
    bool positive() const { return sign() > 0; }
};

struct ResonanceSummand {
    int ell1, ell2;      // also the highest restricted weight coefficients of
                         // lambda(ell1,ell2) - rho
    QuadraticNumber C;   // residue constant C_{ell1,ell2}
};

struct Resonance {
    Rational z_abs_sq;                        // |z_(k)|^2
    std::vector<std::pair<int, int>> pairs;   // S_(k), lexicographic
    std::vector<ResonanceSummand> summands;   // one per pair
};

// Lattice point of one factor; even-multiplicity factors have an empty
// lattice and raise empty_lattice_error.
LatticePoint lattice_point(const ProductSpace& p, int factor, int ell);

// Distinct branch values L^2 <= R^2, sorted increasing, coincidences merged
// with all sources kept.
std::vector<BranchPoint> branch_points(const ProductSpace& p, const Rational& R_sq);

// All resonances with |z|^2 <= R^2, grouped by the exact rational key and
// sorted. Empty unless the extension class is BothOddMeromorphic.
std::vector<Resonance> enumerate_resonances(const ProductSpace& p, const Rational& R_sq);

// C_{ell1,ell2} = p1 p2 (b1 L2/L1 + b2 L1/L2), stored exactly over the basis
// {b1, b2}: coefficient of b1 is p1 p2 (rho1+ell1)/(rho2+ell2), of b2 the
// reciprocal ratio. Always positive.
QuadraticNumber residue_constant(const ProductSpace& p, int ell1, int ell2);

struct DecompositionReport {
    Rational z_abs_sq;
    std::size_t summand_count;                  // |S_(k)|
    std::vector<ResonanceSummand> summands;
};

// Residue-operator decomposition of the k-th resonance (k counted by
// increasing |z|^2 from 0).
DecompositionReport residue_summands(const ProductSpace& p, std::size_t k);

// Index-count N_{j,v}: the largest ell with rho + ell < c(r) v / b, via the
// floor-formula case split. All comparisons are exact on squares. Raises
// case_hypothesis_error when the case hypotheses on c(r) fail.
int index_bound(const RankOneSpace& s, const Rational& v, const Rational& cr);

}  // namespace resolap

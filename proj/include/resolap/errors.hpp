#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace resolap {

// Invalid (family, n), bad space strings, out-of-range config.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Evaluation outside a map's domain (branch cuts, w = 0, chart codomain).
struct map_domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// cot-factor pole hit; carries the integer lattice offset n with i*x/b - rho = n.
struct pole_error : std::runtime_error {
    int lattice_offset;
    std::complex<double> location;
    pole_error(const std::string& what, int n, std::complex<double> x)
        : std::runtime_error(what), lattice_offset(n), location(x) {}
};

// Lattice requested on an even-multiplicity factor (S_j is empty there).
struct empty_lattice_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Hypotheses of the index-count case split not met; caller must shrink c(r).
struct case_hypothesis_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A lattice point lies on (or within the guard band of) the deformed contour image.
struct contour_collision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Integrand pole too close to a quadrature contour for the node budget.
struct ill_conditioned_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Chart-change derivative evaluated at |z| = L_m.
struct singular_derivative_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Residue quadrature failed the delta-halving stability test.
struct unreliable_residue_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace resolap

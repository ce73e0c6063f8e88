#ifndef SPINRING_CLOSED_FORM_HPP
#define SPINRING_CLOSED_FORM_HPP

#include <optional>
#include <utility>

#include "spinring/complex_matrix.hpp"
#include "spinring/spin_model.hpp"

namespace spinring {

/// Entries of the two-site thermal density matrix in closed form.
/// A = 1/(2cosh(J/T) + 2cosh(B/T)); the stored entries are already
/// scaled by A and assemble to a trace-1 matrix.
struct TwoSiteElements {
    double normalization = 0.0;  // A
    double diag_minus = 0.0;     // exp(-B/T) * A, population of |00>
    double diag_plus = 0.0;      // exp(+B/T) * A, population of |11>
    double cosh_term = 0.0;      // cosh(J/T) * A
    double sinh_term = 0.0;      // sinh(J/T) * A
};

/// Elements of the three-site uniform-field reduced density matrix,
/// z = exp(J/T), and the ring partition function
/// Z = 2cosh(3B/T) + 2cosh(B/T)(2z + z^-2).
struct ThreeSiteElements {
    double u = 0.0;
    double v = 0.0;
    double w = 0.0;
    double y = 0.0;
    double z = 0.0;
    double Z = 0.0;
    double beta = 0.0;  // 1/T
};

TwoSiteElements two_site_elements(double coupling, double field, double temperature);

/// Closed-form two-site thermal state:
/// diag(e^{-B/T}, cosh(J/T), cosh(J/T), e^{B/T}) * A with off-diagonal
/// -sinh(J/T) * A in the middle block.
ComplexMatrix rho12_two_site(double coupling, double field, double temperature);

/// Closed-form two-site thermal concurrence
/// max{(sinh(J/T) - 1) / (cosh(J/T) + cosh(B/T)), 0}; zero for all J <= 0.
double concurrence_two_site(double coupling, double field, double temperature);

/// T_c = J / asinh(1) = J / ln(1 + sqrt(2)) for J > 0, independent of the
/// field; nullopt for J <= 0 (no entanglement transition).
std::optional<double> two_site_critical_temperature(double coupling);

ThreeSiteElements three_site_elements(double coupling, double field, double temperature);

/// Closed-form reduced two-site state of the three-site uniform-field ring,
/// (2/3Z) * diag-block(v, [[w, y], [y, w]], u) in the engine basis: the
/// e^{+3B/T}-weighted element sits at the both-down position |11>, since a
/// positive uniform field lowers the energy of down spins.
std::pair<ComplexMatrix, ThreeSiteElements> rho12_three_site_uniform(double coupling, double field,
                                                                     double temperature);

/// Closed-form three-site pairwise concurrence
/// (4/3Z) * max{|y| - sqrt(uv), 0}.
double concurrence_three_site(double coupling, double field, double temperature);

/// Zero-field entanglement condition for the three-site ring:
/// 2|z^-2 - z| - 3 - 2z - z^-2 > 0 with z = exp(J/T).
bool three_site_entanglement_condition(double coupling, double temperature);

// Field conventions mapping the closed forms onto the exact-diagonalization
// engine. The per-site engine field differs between the two-site and
// three-site closed forms; these factories make the mapping explicit and
// every CLI artifact reports which one was applied.

/// Two-site ring with per-site field b = B/2.
ModelSpec two_site_model(double coupling, double field);
/// Three-site uniform ring with per-site field b = B.
ModelSpec three_site_uniform_model(double coupling, double field);
/// Three-site ring with a single impurity field b_3 = B * |J| on the last
/// site (B >= 0 a dimensionless knob).
ModelSpec three_site_impurity_model(double coupling, double field);

}  // namespace spinring

#endif

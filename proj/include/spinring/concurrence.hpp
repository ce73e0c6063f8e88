#ifndef SPINRING_CONCURRENCE_HPP
#define SPINRING_CONCURRENCE_HPP

#include <array>
#include <vector>

#include "spinring/complex_matrix.hpp"
#include "spinring/linalg.hpp"

namespace spinring {

/// Wootters concurrence of a two-qubit state, with the intermediate
/// spectrum. lambdas are the square roots of the eigenvalues of
/// rho (sy⊗sy) rho* (sy⊗sy) in descending order; raw = l1-l2-l3-l4 and
/// concurrence = max(raw, 0).
struct ConcurrenceReport {
    double concurrence = 0.0;
    std::array<double, 4> lambdas{};
    double raw = 0.0;
};

/// sy ⊗ sy, the two-qubit spin-flip operator.
const ComplexMatrix& spin_flip_operator();

/// The full spin-flip product rho (sy⊗sy) rho* (sy⊗sy). Its spectrum is
/// real and non-negative for any valid density matrix even though the
/// product itself need not be Hermitian.
ComplexMatrix spin_flip(const ComplexMatrix& rho,
                        const LinalgConfig& cfg = default_linalg_config());

/// Wootters concurrence. The lambdas are obtained through the Hermitian
/// equivalent sqrt(rho) (sy⊗sy) rho* (sy⊗sy) sqrt(rho), so only the
/// Hermitian eigensolver is needed.
ConcurrenceReport concurrence(const ComplexMatrix& rho,
                              const LinalgConfig& cfg = default_linalg_config());

/// Pure-state concurrence C = |<psi| sy⊗sy |psi*>|; independent check of
/// the mixed-state route for |psi><psi|.
double pure_concurrence(const std::vector<Complex>& psi);

/// Binary entropy in bits, with h(0) = h(1) = 0.
double binary_entropy(double x);

/// Two-qubit entanglement of formation as a function of concurrence:
/// h((1 + sqrt(1 - c^2))/2).
double entanglement_of_formation(double c);

/// Validates trace ~ 1, Hermiticity and positive semidefiniteness;
/// throws std::invalid_argument naming the violated property.
void validate_density_matrix(const ComplexMatrix& rho, double tol = 1e-8,
                             const LinalgConfig& cfg = default_linalg_config());

}  // namespace spinring

#endif

#ifndef SPINRING_LINALG_HPP
#define SPINRING_LINALG_HPP

#include <cstddef>
#include <functional>
#include <vector>

#include "spinring/complex_matrix.hpp"

namespace spinring {

/// Tolerances and solver thresholds for the dense Hermitian kernel.
/// Defaults follow the documented contracts; override per call if needed.
struct LinalgConfig {
    double hermiticity_tol = 1e-9;      // input validation for eigh/func_of_hermitian
    double jacobi_rel_threshold = 1e-12;  // off-diagonal norm relative to Frobenius norm
    int jacobi_sweep_cap = 100;
    std::size_t jacobi_dim_limit = 64;  // above this, Householder tridiagonalization + QL
    int ql_iteration_cap = 60;          // implicit-shift QL iterations per eigenvalue
    std::size_t max_dim = 1024;         // hard size limit for operator construction
};

const LinalgConfig& default_linalg_config();

/// Eigendecomposition of a Hermitian matrix. Eigenvalues ascending,
/// eigenvectors stored as columns of a unitary matrix, so
/// M = V diag(lambda) V†.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Kronecker product: result[(i*bd+k),(j*bd+l)] = a(i,j) * b(k,l).
/// Throws std::length_error if a.dim*b.dim exceeds cfg.max_dim.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b,
                   const LinalgConfig& cfg = default_linalg_config());

/// Hermitian eigensolver. The input must be Hermitian within
/// cfg.hermiticity_tol (it is symmetrized as (M+M†)/2 before
/// decomposition). Cyclic Jacobi rotations for dim <= cfg.jacobi_dim_limit,
/// Householder tridiagonalization with implicit-shift QL above.
EigenDecomposition eigh(const ComplexMatrix& m,
                        const LinalgConfig& cfg = default_linalg_config());

/// f(M) = V diag(f(lambda)) V† via the spectral theorem.
/// Throws std::domain_error naming the eigenvalue if f is non-finite there.
ComplexMatrix func_of_hermitian(const ComplexMatrix& m, const std::function<double(double)>& f,
                                const LinalgConfig& cfg = default_linalg_config());

/// Partial trace of an n_sites-qubit operator onto the sites listed in
/// `keep` (strictly increasing, 0-based). Site 0 is the most significant
/// bit of the computational-basis index; kept sites retain their relative
/// order in the reduced index.
ComplexMatrix partial_trace(const ComplexMatrix& rho, const std::vector<int>& keep, int n_sites);

}  // namespace spinring

#endif

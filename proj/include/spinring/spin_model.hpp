#ifndef SPINRING_SPIN_MODEL_HPP
#define SPINRING_SPIN_MODEL_HPP

#include <string>
#include <utility>
#include <vector>

#include "spinring/complex_matrix.hpp"

namespace spinring {

enum class Pauli { X, Y, Z };
enum class Boundary { Cyclic, Open };

const ComplexMatrix& sigma_x();
const ComplexMatrix& sigma_y();
const ComplexMatrix& sigma_z();
const ComplexMatrix& identity2();
const ComplexMatrix& pauli_matrix(Pauli which);

/// Description of an N-qubit Heisenberg-family spin ring.
///
/// The Hamiltonian built from it is
///
///   H = (J/2) sum_bonds (sx sx + sy sy + zz_weight * sz sz)
///       + sum_n fields[n] * sz_n
///
/// with each nearest-neighbour bond counted exactly once (a ring for
/// cyclic boundaries, a chain for open ones; the two-site cyclic ring is
/// a single bond). zz_weight = 0 is the XX model, 1 the isotropic form.
/// J > 0 is antiferromagnetic, J < 0 ferromagnetic. Boltzmann's constant
/// is fixed to 1 throughout, so fields and temperatures share the energy
/// units of J.
struct ModelSpec {
    int n_sites = 2;
    double coupling = 1.0;           // J
    double zz_weight = 0.0;          // weight of the sz sz term
    std::vector<double> fields;      // per-site sz coefficients, size n_sites
    Boundary boundary = Boundary::Cyclic;

    void validate() const;  // throws std::length_error / std::invalid_argument
};

/// Pairs of sites coupled by the exchange term, each exactly once.
std::vector<std::pair<int, int>> bond_list(const ModelSpec& spec);

/// sigma^a embedded at `site` in the 2^n_sites space. Site 0 is the most
/// significant bit of the computational-basis index, and |0> is the
/// sz = +1 basis state.
ComplexMatrix pauli_at_site(Pauli which, int site, int n_sites);

/// Dense Hamiltonian matrix for the spec; real symmetric in the
/// computational basis.
ComplexMatrix build_hamiltonian(const ModelSpec& spec);

std::string to_string(Boundary b);
Boundary boundary_from_string(const std::string& s);

}  // namespace spinring

#endif

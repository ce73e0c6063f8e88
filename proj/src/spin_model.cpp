#include "spinring/spin_model.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "spinring/linalg.hpp"

namespace spinring {

const ComplexMatrix& sigma_x() {
    static const ComplexMatrix m = ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}});
    return m;
}

const ComplexMatrix& sigma_y() {
    static const ComplexMatrix m =
        ComplexMatrix::from_rows({{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}});
    return m;
}

const ComplexMatrix& sigma_z() {
    static const ComplexMatrix m = ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}});
    return m;
}

const ComplexMatrix& identity2() {
    static const ComplexMatrix m = ComplexMatrix::identity(2);
    return m;
}

const ComplexMatrix& pauli_matrix(Pauli which) {
    switch (which) {
        case Pauli::X: return sigma_x();
        case Pauli::Y: return sigma_y();
        default: return sigma_z();
    }
}

void ModelSpec::validate() const {
    if (n_sites < 2 || n_sites > 10) {
        std::ostringstream msg;
        msg << "ModelSpec: n_sites must be in [2, 10], got " << n_sites;
        throw std::length_error(msg.str());
    }
    if (fields.size() != static_cast<std::size_t>(n_sites))
        throw std::invalid_argument("ModelSpec: fields must have exactly n_sites entries");
    if (!std::isfinite(coupling) || !std::isfinite(zz_weight))
        throw std::invalid_argument("ModelSpec: coupling and zz_weight must be finite");
    for (double b : fields)
        if (!std::isfinite(b)) throw std::invalid_argument("ModelSpec: fields must be finite");
}

std::vector<std::pair<int, int>> bond_list(const ModelSpec& spec) {
    std::vector<std::pair<int, int>> bonds;
    for (int i = 0; i + 1 < spec.n_sites; ++i) bonds.emplace_back(i, i + 1);
    // Two-site cyclic ring collapses to a single bond.
    if (spec.boundary == Boundary::Cyclic && spec.n_sites > 2)
        bonds.emplace_back(spec.n_sites - 1, 0);
    return bonds;
}

ComplexMatrix pauli_at_site(Pauli which, int site, int n_sites) {
    if (n_sites < 1 || n_sites > 10)
        throw std::invalid_argument("pauli_at_site: n_sites must be in [1, 10]");
    if (site < 0 || site >= n_sites)
        throw std::invalid_argument("pauli_at_site: site index out of range");
    ComplexMatrix out = ComplexMatrix::identity(1);
    for (int s = 0; s < n_sites; ++s)
        out = kron(out, s == site ? pauli_matrix(which) : identity2());
    return out;
}

ComplexMatrix build_hamiltonian(const ModelSpec& spec) {
    spec.validate();
    const int n = spec.n_sites;
    const std::size_t dim = std::size_t(1) << n;
    const double half_j = 0.5 * spec.coupling;

    // Basis state s: site k occupies bit n-1-k; bit 0 means sz = +1.
    const auto z_of = [n](std::size_t state, int site) {
        return ((state >> (n - 1 - site)) & 1) ? -1.0 : 1.0;
    };

    ComplexMatrix h(dim);
    const auto bonds = bond_list(spec);
    for (std::size_t s = 0; s < dim; ++s) {
        double diag = 0.0;
        for (int site = 0; site < n; ++site) diag += spec.fields[site] * z_of(s, site);
        for (const auto& [i, j] : bonds) diag += half_j * spec.zz_weight * z_of(s, i) * z_of(s, j);
        h(s, s) = diag;

        // (J/2)(sx sx + sy sy) exchanges anti-aligned pairs with amplitude J.
        for (const auto& [i, j] : bonds) {
            if (z_of(s, i) * z_of(s, j) < 0.0) {
                const std::size_t mask =
                    (std::size_t(1) << (n - 1 - i)) | (std::size_t(1) << (n - 1 - j));
                h(s ^ mask, s) = spec.coupling;
            }
        }
    }
    return h;
}

std::string to_string(Boundary b) { return b == Boundary::Cyclic ? "cyclic" : "open"; }

Boundary boundary_from_string(const std::string& s) {
    if (s == "cyclic") return Boundary::Cyclic;
    if (s == "open") return Boundary::Open;
    throw std::invalid_argument("boundary must be 'cyclic' or 'open', got '" + s + "'");
}

}  // namespace spinring

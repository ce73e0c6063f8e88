#include "spinring/concurrence.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "spinring/spin_model.hpp"

namespace spinring {

const ComplexMatrix& spin_flip_operator() {
    static const ComplexMatrix f = kron(sigma_y(), sigma_y());
    return f;
}

void validate_density_matrix(const ComplexMatrix& rho, double tol, const LinalgConfig& cfg) {
    std::ostringstream bad;
    if (!rho.is_finite()) bad << "non-finite entries; ";
    const double tr_err = std::abs(rho.trace() - Complex(1.0, 0.0));
    if (tr_err > tol) bad << "trace deviates from 1 by " << tr_err << "; ";
    const double herr = rho.hermiticity_error();
    if (herr > tol) bad << "not Hermitian (max |M - M†| = " << herr << "); ";
    if (herr <= cfg.hermiticity_tol) {
        const auto ed = eigh(rho, cfg);
        if (ed.eigenvalues.front() < -tol)
            bad << "not positive semidefinite (min eigenvalue " << ed.eigenvalues.front() << "); ";
    }
    const std::string msg = bad.str();
    if (!msg.empty()) throw std::invalid_argument("not a valid density matrix: " + msg);
}

ComplexMatrix spin_flip(const ComplexMatrix& rho, const LinalgConfig& cfg) {
    if (rho.dim() != 4) throw std::invalid_argument("spin_flip: expected a 4x4 density matrix");
    validate_density_matrix(rho, 1e-8, cfg);
    const ComplexMatrix& f = spin_flip_operator();
    return rho * f * rho.conjugate() * f;
}

ConcurrenceReport concurrence(const ComplexMatrix& rho, const LinalgConfig& cfg) {
    if (rho.dim() != 4) throw std::invalid_argument("concurrence: expected a 4x4 density matrix");
    validate_density_matrix(rho, 1e-8, cfg);

    // sqrt(rho) with the spectrum clamped at zero before the square root;
    // thermal states are PSD up to round-off (validated above).
    const ComplexMatrix s = func_of_hermitian(
        rho, [](double x) { return std::sqrt(std::max(x, 0.0)); }, cfg);

    // The lambdas are the singular values of sqrt(rho) (sy⊗sy) sqrt(rho*).
    // Read them off the Hermitian Jordan-Wielandt dilation, whose spectrum
    // is +-sigma_i: this stays accurate for singular values near zero,
    // where squaring would drown them in round-off.
    const ComplexMatrix m = s * spin_flip_operator() * s.conjugate();
    ComplexMatrix dilation(8);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            dilation(i, 4 + j) = m(i, j);
            dilation(4 + j, i) = std::conj(m(i, j));
        }

    const auto ed = eigh(dilation, cfg);
    ConcurrenceReport report;
    for (int i = 0; i < 4; ++i) {
        const double lam = ed.eigenvalues[static_cast<std::size_t>(7 - i)];  // descending
        if (lam < -1e-10) {
            std::ostringstream msg;
            msg << "concurrence: spin-flip spectrum has eigenvalue " << lam << " below clamp";
            throw std::runtime_error(msg.str());
        }
        report.lambdas[i] = std::max(lam, 0.0);
    }
    report.raw =
        report.lambdas[0] - report.lambdas[1] - report.lambdas[2] - report.lambdas[3];
    report.concurrence = std::clamp(report.raw, 0.0, 1.0);
    return report;
}

double pure_concurrence(const std::vector<Complex>& psi) {
    if (psi.size() != 4) throw std::invalid_argument("pure_concurrence: expected a length-4 vector");
    double norm2 = 0.0;
    for (const auto& c : psi) norm2 += std::norm(c);
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-10)
        throw std::invalid_argument("pure_concurrence: state vector is not normalized");

    // <psi| sy⊗sy |psi*> reduces to 2 (psi0 psi3 - psi1 psi2).
    const Complex amp = 2.0 * (psi[0] * psi[3] - psi[1] * psi[2]);
    return std::min(std::abs(amp), 1.0);
}

double binary_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("binary_entropy: argument outside [0, 1]");
    if (x == 0.0 || x == 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double entanglement_of_formation(double c) {
    if (c < 0.0 || c > 1.0)
        throw std::domain_error("entanglement_of_formation: concurrence outside [0, 1]");
    const double x = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c)));
    return binary_entropy(x);
}

}  // namespace spinring

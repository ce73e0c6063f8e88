#include "spinring/thermal.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace spinring {

double ThermalState::unshifted_partition_function() const {
    if (temperature.kind != Temperature::Kind::Finite) return partition_function;
    return partition_function * std::exp(-energy_shift / temperature.value);
}

double ThermalState::log_partition_function() const {
    if (temperature.kind != Temperature::Kind::Finite) return std::log(partition_function);
    return std::log(partition_function) - energy_shift / temperature.value;
}

namespace {

// rho = V diag(w) V† with w normalized to sum 1.
ComplexMatrix assemble_mixture(const ComplexMatrix& v, const std::vector<double>& w) {
    const std::size_t n = v.dim();
    ComplexMatrix rho(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            Complex acc(0.0, 0.0);
            for (std::size_t k = 0; k < n; ++k) {
                if (w[k] == 0.0) continue;
                acc += v(i, k) * w[k] * std::conj(v(j, k));
            }
            rho(i, j) = acc;
            rho(j, i) = std::conj(acc);
        }
        rho(i, i) = Complex(rho(i, i).real(), 0.0);
    }
    return rho;
}

}  // namespace

ThermalState gibbs_state(const ComplexMatrix& h, double temperature, const LinalgConfig& cfg) {
    if (!(temperature > 0.0)) {
        throw std::domain_error(
            "gibbs_state: temperature must be > 0; use ground_state for T = 0 or "
            "maximally_mixed for T = infinity");
    }
    const EigenDecomposition ed = eigh(h, cfg);
    const std::size_t n = h.dim();
    const double shift = ed.eigenvalues.front();

    std::vector<double> w(n);
    double z = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        w[i] = std::exp(-(ed.eigenvalues[i] - shift) / temperature);
        z += w[i];
    }
    for (auto& x : w) x /= z;

    ThermalState state;
    state.rho = assemble_mixture(ed.eigenvectors, w);
    state.temperature = Temperature::finite(temperature);
    state.partition_function = z;
    state.energy_shift = shift;
    return state;
}

double ground_state_gap_threshold(const ComplexMatrix& h) {
    return 1e-8 * std::max(1.0, h.max_abs());
}

ThermalState ground_state(const ComplexMatrix& h, const LinalgConfig& cfg) {
    const EigenDecomposition ed = eigh(h, cfg);
    const std::size_t n = h.dim();
    const double threshold = ground_state_gap_threshold(h);
    const double e0 = ed.eigenvalues.front();

    std::size_t degeneracy = 1;
    while (degeneracy < n && ed.eigenvalues[degeneracy] - e0 <= threshold) ++degeneracy;

    std::vector<double> w(n, 0.0);
    for (std::size_t i = 0; i < degeneracy; ++i) w[i] = 1.0 / static_cast<double>(degeneracy);

    ThermalState state;
    state.rho = assemble_mixture(ed.eigenvectors, w);
    state.temperature = Temperature::zero();
    state.partition_function = static_cast<double>(degeneracy);
    state.energy_shift = e0;
    return state;
}

ThermalState maximally_mixed(std::size_t dim) {
    if (dim == 0) throw std::invalid_argument("maximally_mixed: dim must be >= 1");
    ThermalState state;
    state.rho = ComplexMatrix::identity(dim) * (1.0 / static_cast<double>(dim));
    state.temperature = Temperature::infinite();
    state.partition_function = static_cast<double>(dim);
    state.energy_shift = 0.0;
    return state;
}

PartitionValue partition_function(const ComplexMatrix& h, double temperature,
                                  const LinalgConfig& cfg) {
    if (!(temperature > 0.0)) {
        throw std::domain_error(
            "partition_function: temperature must be > 0; use ground_state for T = 0 or "
            "maximally_mixed for T = infinity");
    }
    const EigenDecomposition ed = eigh(h, cfg);
    const double shift = ed.eigenvalues.front();
    double z = 0.0;
    for (double lambda : ed.eigenvalues) z += std::exp(-(lambda - shift) / temperature);

    const double unshifted = z * std::exp(-shift / temperature);
    if (std::isfinite(unshifted) && unshifted > 0.0) return {unshifted, 0.0};
    return {z, shift};
}

}  // namespace spinring

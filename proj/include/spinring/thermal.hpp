#ifndef SPINRING_THERMAL_HPP
#define SPINRING_THERMAL_HPP

#include "spinring/complex_matrix.hpp"
#include "spinring/linalg.hpp"

namespace spinring {

/// Temperature, with explicit zero / infinite limits.
struct Temperature {
    enum class Kind { Zero, Finite, Infinite };
    Kind kind = Kind::Finite;
    double value = 0.0;  // meaningful when kind == Finite

    static Temperature zero() { return {Kind::Zero, 0.0}; }
    static Temperature finite(double t) { return {Kind::Finite, t}; }
    static Temperature infinite() { return {Kind::Infinite, 0.0}; }
};

/// Gibbs density matrix together with its temperature and partition
/// function. The partition function is stored in the shifted convention
/// Z_shifted = tr exp(-(H - shift)/T) with shift = ground-state energy,
/// which stays representable for beta up to 1e3 and beyond.
struct ThermalState {
    ComplexMatrix rho;
    Temperature temperature;
    double partition_function = 0.0;  // shifted convention
    double energy_shift = 0.0;

    /// tr exp(-H/T); may overflow to +inf for large shift/T.
    double unshifted_partition_function() const;
    /// log of the unshifted partition function, always finite.
    double log_partition_function() const;
};

/// rho(T) = exp(-H/T) / tr exp(-H/T), via the spectral decomposition with
/// the ground-state energy subtracted before exponentiation.
/// T must be > 0; use ground_state / maximally_mixed for the limits.
ThermalState gibbs_state(const ComplexMatrix& h, double temperature,
                         const LinalgConfig& cfg = default_linalg_config());

/// T -> 0 limit: equal-weight mixture over the ground eigenspace.
/// Degeneracy is detected with gap threshold 1e-8 * max(1, |H|_max).
ThermalState ground_state(const ComplexMatrix& h, const LinalgConfig& cfg = default_linalg_config());

/// T -> infinity limit: I/dim.
ThermalState maximally_mixed(std::size_t dim);

/// Partition function value. energy_shift is 0 when the unshifted trace is
/// representable; otherwise value is the shifted trace and energy_shift
/// records the subtracted ground-state energy.
struct PartitionValue {
    double value = 0.0;
    double energy_shift = 0.0;
};
PartitionValue partition_function(const ComplexMatrix& h, double temperature,
                                  const LinalgConfig& cfg = default_linalg_config());

/// Gap threshold used by ground_state for degeneracy detection.
double ground_state_gap_threshold(const ComplexMatrix& h);

}  // namespace spinring

#endif

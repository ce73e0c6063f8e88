#ifndef SPINRING_CRITICAL_SCAN_HPP
#define SPINRING_CRITICAL_SCAN_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spinring/spin_model.hpp"

namespace spinring {

/// Concurrence below this value counts as "not entangled" when bracketing
/// a transition; below the numerical noise floor of the 1e-10 linear
/// algebra tolerances.
inline constexpr double kEntanglementIndicatorThreshold = 1e-12;

/// Default bisection bracket is (0.01, 5.0) * |J| with tolerance 1e-6.
inline constexpr double kDefaultBracketLowFactor = 0.01;
inline constexpr double kDefaultBracketHighFactor = 5.0;
inline constexpr double kDefaultCriticalTolerance = 1e-6;

struct CriticalResult {
    std::optional<double> t_c;  // empty: not entangled anywhere in the bracket
    double bracket_low = 0.0;
    double bracket_high = 0.0;
    double tolerance = 0.0;
    int iterations = 0;
    std::pair<int, int> pair{0, 1};
    // Endpoint concurrences, reported so a violated bracketing assumption
    // is visible.
    double concurrence_low = 0.0;
    double concurrence_high = 0.0;
};

struct CurvePoint {
    double tau = 0.0;  // scaled temperature kT/|J|
    double concurrence = 0.0;
};

struct ConcurrenceCurve {
    std::vector<CurvePoint> points;
    ModelSpec spec;
    std::pair<int, int> pair{0, 1};
    std::string field_note;  // which field-mapping convention produced spec
};

/// Thermal concurrence of the two-site reduction of the Gibbs state:
/// Gibbs state of the spec at T, partial trace onto the pair, Wootters
/// concurrence. Sites are 0-based and must be distinct.
double concurrence_at(const ModelSpec& spec, std::pair<int, int> pair, double temperature);

/// Bisection on the indicator "concurrence > threshold" until the bracket
/// width is <= tol. Requires concurrence positive at t_low and zero at
/// t_high; otherwise returns an empty t_c with the endpoint concurrences.
CriticalResult find_critical_temperature(const ModelSpec& spec, std::pair<int, int> pair,
                                         double t_low, double t_high,
                                         double tol = kDefaultCriticalTolerance);

/// Same with the default bracket (0.01, 5.0)*|J|; requires coupling != 0.
CriticalResult find_critical_temperature(const ModelSpec& spec, std::pair<int, int> pair);

/// Point-wise concurrence over a strictly increasing tau grid, T = tau*|J|.
/// Grid points are independent and evaluated in parallel; assembly
/// preserves grid order.
ConcurrenceCurve curve(const ModelSpec& spec, std::pair<int, int> pair,
                       const std::vector<double>& tau_grid, std::string field_note = "");

struct FieldSweepRow {
    double field = 0.0;  // the swept B value, in the caller's convention
    std::optional<double> t_c;
    double concurrence_low = 0.0;
    double concurrence_high = 0.0;
};

/// Applies find_critical_temperature for each field value; make_spec maps
/// a swept B to a full model (see the field-convention factories in
/// closed_form.hpp).
std::vector<FieldSweepRow> sweep_field(const std::function<ModelSpec(double)>& make_spec,
                                       std::pair<int, int> pair,
                                       const std::vector<double>& field_values, double t_low,
                                       double t_high, double tol = kDefaultCriticalTolerance);

}  // namespace spinring

#endif

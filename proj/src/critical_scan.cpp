#include "spinring/critical_scan.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "spinring/concurrence.hpp"
#include "spinring/linalg.hpp"
#include "spinring/thermal.hpp"

namespace spinring {

double concurrence_at(const ModelSpec& spec, std::pair<int, int> pair, double temperature) {
    spec.validate();
    auto [a, b] = pair;
    if (a == b) throw std::invalid_argument("concurrence_at: pair sites must be distinct");
    if (a > b) std::swap(a, b);
    if (a < 0 || b >= spec.n_sites)
        throw std::invalid_argument("concurrence_at: pair site out of range");

    try {
        const ComplexMatrix h = build_hamiltonian(spec);
        const ThermalState state = gibbs_state(h, temperature);
        const ComplexMatrix reduced = partial_trace(state.rho, {a, b}, spec.n_sites);
        return concurrence(reduced).concurrence;
    } catch (const std::runtime_error& e) {
        std::ostringstream msg;
        msg << "numerical failure at J=" << spec.coupling << ", fields=(";
        for (std::size_t i = 0; i < spec.fields.size(); ++i)
            msg << (i ? "," : "") << spec.fields[i];
        msg << "), T=" << temperature << ": " << e.what();
        throw std::runtime_error(msg.str());
    }
}

CriticalResult find_critical_temperature(const ModelSpec& spec, std::pair<int, int> pair,
                                         double t_low, double t_high, double tol) {
    if (!(t_low > 0.0) || !(t_low < t_high))
        throw std::invalid_argument("find_critical_temperature: need 0 < t_low < t_high");
    if (!(tol >= 1e-8))
        throw std::invalid_argument("find_critical_temperature: tolerance must be >= 1e-8");

    CriticalResult result;
    result.bracket_low = t_low;
    result.bracket_high = t_high;
    result.tolerance = tol;
    result.pair = pair;
    result.concurrence_low = concurrence_at(spec, pair, t_low);
    result.concurrence_high = concurrence_at(spec, pair, t_high);

    const auto entangled = [](double c) { return c > kEntanglementIndicatorThreshold; };
    if (!entangled(result.concurrence_low) || entangled(result.concurrence_high)) {
        return result;  // no bracketing sign change; endpoint values tell why
    }

    double lo = t_low, hi = t_high;
    int iterations = 0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        ++iterations;
        if (entangled(concurrence_at(spec, pair, mid)))
            lo = mid;
        else
            hi = mid;
        if (iterations > 200) break;  // bracket halves each step; unreachable for tol >= 1e-8
    }
    result.t_c = 0.5 * (lo + hi);
    result.iterations = iterations;
    return result;
}

CriticalResult find_critical_temperature(const ModelSpec& spec, std::pair<int, int> pair) {
    const double j = std::abs(spec.coupling);
    if (j == 0.0)
        throw std::domain_error(
            "find_critical_temperature: default bracket scales with |J|, but coupling is 0");
    return find_critical_temperature(spec, pair, kDefaultBracketLowFactor * j,
                                     kDefaultBracketHighFactor * j, kDefaultCriticalTolerance);
}

ConcurrenceCurve curve(const ModelSpec& spec, std::pair<int, int> pair,
                       const std::vector<double>& tau_grid, std::string field_note) {
    spec.validate();
    if (tau_grid.empty()) throw std::invalid_argument("curve: tau grid must be nonempty");
    for (std::size_t i = 0; i < tau_grid.size(); ++i) {
        if (!(tau_grid[i] > 0.0)) throw std::invalid_argument("curve: tau grid must be positive");
        if (i > 0 && !(tau_grid[i] > tau_grid[i - 1]))
            throw std::invalid_argument("curve: tau grid must be strictly increasing");
    }
    const double j = std::abs(spec.coupling);
    if (j == 0.0) throw std::domain_error("curve: tau scaling requires a nonzero coupling");

    ConcurrenceCurve out;
    out.spec = spec;
    out.pair = pair;
    out.field_note = std::move(field_note);
    out.points.resize(tau_grid.size());

    // Grid points are independent pure computations; fan out in blocks and
    // place results by index so assembly preserves grid order.
    const std::size_t n = tau_grid.size();
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), n);
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w]() {
            for (std::size_t i = w; i < n; i += workers)
                out.points[i] = {tau_grid[i], concurrence_at(spec, pair, tau_grid[i] * j)};
        }));
    }
    for (auto& f : futures) f.get();
    return out;
}

std::vector<FieldSweepRow> sweep_field(const std::function<ModelSpec(double)>& make_spec,
                                       std::pair<int, int> pair,
                                       const std::vector<double>& field_values, double t_low,
                                       double t_high, double tol) {
    std::vector<FieldSweepRow> rows(field_values.size());
    const std::size_t n = field_values.size();
    if (n == 0) return rows;
    const std::size_t workers =
        std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), n);
    std::vector<std::future<void>> futures;
    futures.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        futures.push_back(std::async(std::launch::async, [&, w]() {
            for (std::size_t i = w; i < n; i += workers) {
                const CriticalResult r =
                    find_critical_temperature(make_spec(field_values[i]), pair, t_low, t_high, tol);
                rows[i] = {field_values[i], r.t_c, r.concurrence_low, r.concurrence_high};
            }
        }));
    }
    for (auto& f : futures) f.get();
    return rows;
}

}  // namespace spinring

#include "spinring/closed_form.hpp"

#include <cmath>
#include <stdexcept>

namespace spinring {

namespace {

void require_positive_temperature(double t, const char* who) {
    if (!(t > 0.0)) throw std::domain_error(std::string(who) + ": temperature must be > 0");
}

}  // namespace

TwoSiteElements two_site_elements(double coupling, double field, double temperature) {
    require_positive_temperature(temperature, "two_site_elements");
    const double jt = coupling / temperature;
    const double bt = field / temperature;
    TwoSiteElements el;
    el.normalization = 1.0 / (2.0 * std::cosh(jt) + 2.0 * std::cosh(bt));
    el.diag_minus = std::exp(-bt) * el.normalization;
    el.diag_plus = std::exp(bt) * el.normalization;
    el.cosh_term = std::cosh(jt) * el.normalization;
    el.sinh_term = std::sinh(jt) * el.normalization;
    return el;
}

ComplexMatrix rho12_two_site(double coupling, double field, double temperature) {
    const TwoSiteElements el = two_site_elements(coupling, field, temperature);
    ComplexMatrix rho(4);
    rho(0, 0) = el.diag_minus;
    rho(1, 1) = el.cosh_term;
    rho(2, 2) = el.cosh_term;
    rho(3, 3) = el.diag_plus;
    rho(1, 2) = -el.sinh_term;
    rho(2, 1) = -el.sinh_term;
    return rho;
}

double concurrence_two_site(double coupling, double field, double temperature) {
    require_positive_temperature(temperature, "concurrence_two_site");
    const double jt = coupling / temperature;
    const double bt = field / temperature;
    const double c = (std::sinh(jt) - 1.0) / (std::cosh(jt) + std::cosh(bt));
    return std::max(c, 0.0);
}

std::optional<double> two_site_critical_temperature(double coupling) {
    if (coupling <= 0.0) return std::nullopt;
    return coupling / std::asinh(1.0);
}

ThreeSiteElements three_site_elements(double coupling, double field, double temperature) {
    require_positive_temperature(temperature, "three_site_elements");
    ThreeSiteElements el;
    el.beta = 1.0 / temperature;
    el.z = std::exp(el.beta * coupling);
    const double ring = 2.0 * el.z + 1.0 / (el.z * el.z);  // 2z + z^-2
    const double bb = el.beta * field;
    el.u = 1.5 * std::exp(3.0 * bb) + 0.5 * std::exp(bb) * ring;
    el.v = 1.5 * std::exp(-3.0 * bb) + 0.5 * std::exp(-bb) * ring;
    el.w = std::cosh(bb) * ring;
    el.y = std::cosh(bb) * (1.0 / (el.z * el.z) - el.z);
    el.Z = 2.0 * std::cosh(3.0 * bb) + 2.0 * std::cosh(bb) * ring;
    return el;
}

std::pair<ComplexMatrix, ThreeSiteElements> rho12_three_site_uniform(double coupling, double field,
                                                                     double temperature) {
    const ThreeSiteElements el = three_site_elements(coupling, field, temperature);
    const double scale = 2.0 / (3.0 * el.Z);
    ComplexMatrix rho(4);
    rho(0, 0) = scale * el.v;
    rho(1, 1) = scale * el.w;
    rho(2, 2) = scale * el.w;
    rho(3, 3) = scale * el.u;
    rho(1, 2) = scale * el.y;
    rho(2, 1) = scale * el.y;
    return {rho, el};
}

double concurrence_three_site(double coupling, double field, double temperature) {
    const ThreeSiteElements el = three_site_elements(coupling, field, temperature);
    const double raw = (4.0 / (3.0 * el.Z)) * (std::abs(el.y) - std::sqrt(el.u * el.v));
    return std::max(raw, 0.0);
}

bool three_site_entanglement_condition(double coupling, double temperature) {
    require_positive_temperature(temperature, "three_site_entanglement_condition");
    const double z = std::exp(coupling / temperature);
    const double zi2 = 1.0 / (z * z);
    return 2.0 * std::abs(zi2 - z) - 3.0 - 2.0 * z - zi2 > 0.0;
}

ModelSpec two_site_model(double coupling, double field) {
    ModelSpec spec;
    spec.n_sites = 2;
    spec.coupling = coupling;
    spec.zz_weight = 0.0;
    spec.fields = {0.5 * field, 0.5 * field};
    spec.boundary = Boundary::Cyclic;
    return spec;
}

ModelSpec three_site_uniform_model(double coupling, double field) {
    ModelSpec spec;
    spec.n_sites = 3;
    spec.coupling = coupling;
    spec.zz_weight = 0.0;
    spec.fields = {field, field, field};
    spec.boundary = Boundary::Cyclic;
    return spec;
}

ModelSpec three_site_impurity_model(double coupling, double field) {
    ModelSpec spec;
    spec.n_sites = 3;
    spec.coupling = coupling;
    spec.zz_weight = 0.0;
    spec.fields = {0.0, 0.0, field * std::abs(coupling)};
    spec.boundary = Boundary::Cyclic;
    return spec;
}

}  // namespace spinring

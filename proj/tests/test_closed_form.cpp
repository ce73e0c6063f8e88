#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "spinring/closed_form.hpp"
#include "spinring/concurrence.hpp"
#include "spinring/critical_scan.hpp"
#include "spinring/linalg.hpp"
#include "spinring/thermal.hpp"

using namespace spinring;

namespace {

const std::vector<double> kGridJ = {-2.0, -1.0, 1.0, 2.0};
const std::vector<double> kGridB = {0.0, 0.5, 1.0, 2.0};
const std::vector<double> kGridT = {0.2, 0.5, 1.0, 2.0, 5.0};

// Root of a^3 - 3a - 4 = 0 by bisection; the zero-field three-site
// transition satisfies this with a = exp(1/T_c) at |J| = 1.
double cubic_root() {
    double lo = 2.0, hi = 3.0;
    while (hi - lo > 1e-14) {
        const double mid = 0.5 * (lo + hi);
        ((mid * mid * mid - 3.0 * mid - 4.0) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("two-site closed form with everything switched off is maximally mixed") {
    CHECK(max_abs_diff(rho12_two_site(0.0, 0.0, 3.7), ComplexMatrix::identity(4) * 0.25) <=
          1e-14);
}

TEST_CASE("two-site closed form middle block at J=1, B=0, T=1") {
    const auto rho = rho12_two_site(1.0, 0.0, 1.0);
    const double a = 1.0 / (2.0 * std::cosh(1.0) + 2.0);
    CHECK(rho(1, 1).real() == doctest::Approx(std::cosh(1.0) * a).epsilon(1e-13));
    CHECK(rho(2, 2).real() == doctest::Approx(std::cosh(1.0) * a).epsilon(1e-13));
    CHECK(rho(1, 2).real() == doctest::Approx(-std::sinh(1.0) * a).epsilon(1e-13));
    CHECK(rho(0, 0).real() == doctest::Approx(a).epsilon(1e-13));
    CHECK(std::abs(rho.trace() - Complex(1.0, 0.0)) <= 1e-12);
}

TEST_CASE("two-site elements record the normalization") {
    const auto el = two_site_elements(1.0, 0.5, 2.0);
    CHECK(el.normalization ==
          doctest::Approx(1.0 / (2.0 * std::cosh(0.5) + 2.0 * std::cosh(0.25))).epsilon(1e-13));
    CHECK(el.diag_minus * el.diag_plus ==
          doctest::Approx(el.normalization * el.normalization).epsilon(1e-13));
}

TEST_CASE("two-site closed form equals the ED Gibbs state with b = B/2 on the full grid") {
    double dev = 0.0;
    for (double j : kGridJ)
        for (double b : kGridB)
            for (double t : kGridT) {
                const auto ed = gibbs_state(build_hamiltonian(two_site_model(j, b)), t);
                dev = std::max(dev, max_abs_diff(rho12_two_site(j, b, t), ed.rho));
            }
    CHECK(dev <= 1e-10);
}

TEST_CASE("two-site concurrence value at J=1, B=0, T=1") {
    const double expected = (std::sinh(1.0) - 1.0) / (std::cosh(1.0) + 1.0);
    CHECK(concurrence_two_site(1.0, 0.0, 1.0) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(concurrence_two_site(1.0, 0.0, 1.0) == doctest::Approx(0.06890).epsilon(2e-4));
}

TEST_CASE("two-site closed-form concurrence vanishes for non-positive coupling") {
    for (double b : {0.0, 1.0, 5.0})
        for (double t : {0.1, 1.0, 10.0}) {
            CHECK(concurrence_two_site(-1.0, b, t) == 0.0);
            CHECK(concurrence_two_site(0.0, b, t) == 0.0);
        }
}

TEST_CASE("two-site concurrence vanishes above the transition") {
    CHECK(concurrence_two_site(1.0, 0.0, 1.2) == 0.0);
    CHECK(concurrence_two_site(1.0, 3.0, 1.2) == 0.0);
}

TEST_CASE("two-site critical temperature: J / asinh(1)") {
    const auto tc = two_site_critical_temperature(1.0);
    REQUIRE(tc.has_value());
    CHECK(*tc == doctest::Approx(1.0 / std::log(1.0 + std::sqrt(2.0))).epsilon(1e-14));
    CHECK(*tc == doctest::Approx(1.13459).epsilon(1e-5));
    const auto tc2 = two_site_critical_temperature(2.0);
    REQUIRE(tc2.has_value());
    CHECK(*tc2 == doctest::Approx(2.0 * *tc).epsilon(1e-14));
    CHECK_FALSE(two_site_critical_temperature(-1.0).has_value());
    CHECK_FALSE(two_site_critical_temperature(0.0).has_value());
}

TEST_CASE("concurrence crosses zero at the two-site critical temperature") {
    const double tc = *two_site_critical_temperature(1.0);
    for (double b : {0.0, 1.0, 2.0}) {
        CHECK(concurrence_two_site(1.0, b, tc - 1e-4) > 0.0);
        CHECK(concurrence_two_site(1.0, b, tc + 1e-4) == 0.0);
    }
}

TEST_CASE("three-site elements at zero field") {
    const double j = -1.0, t = 0.8;
    const auto el = three_site_elements(j, 0.0, t);
    const double z = std::exp(j / t);
    const double ring = 2.0 * z + 1.0 / (z * z);
    CHECK(el.u == doctest::Approx(1.5 + 0.5 * ring).epsilon(1e-13));
    CHECK(el.v == doctest::Approx(el.u).epsilon(1e-13));
    CHECK(el.w == doctest::Approx(ring).epsilon(1e-13));
    CHECK(el.y == doctest::Approx(1.0 / (z * z) - z).epsilon(1e-13));
    CHECK(el.Z == doctest::Approx(2.0 + 2.0 * ring).epsilon(1e-13));
}

TEST_CASE("three-site closed form with everything switched off is maximally mixed") {
    const auto [rho, el] = rho12_three_site_uniform(0.0, 0.0, 1.3);
    CHECK(max_abs_diff(rho, ComplexMatrix::identity(4) * 0.25) <= 1e-14);
    (void)el;
}

TEST_CASE("three-site closed form equals the ED partial trace with b = B on the full grid") {
    double dev = 0.0;
    for (double j : kGridJ)
        for (double b : kGridB)
            for (double t : kGridT) {
                const auto state = gibbs_state(build_hamiltonian(three_site_uniform_model(j, b)), t);
                const auto reduced = partial_trace(state.rho, {0, 1}, 3);
                const auto [closed, el] = rho12_three_site_uniform(j, b, t);
                dev = std::max(dev, max_abs_diff(closed, reduced));
                CHECK(std::abs(closed.trace() - Complex(1.0, 0.0)) <= 1e-10);
                (void)el;
            }
    CHECK(dev <= 1e-10);
}

TEST_CASE("all three pairs of the uniform ring share the same reduced state") {
    const auto state = gibbs_state(build_hamiltonian(three_site_uniform_model(-1.0, 0.7)), 0.9);
    const auto r01 = partial_trace(state.rho, {0, 1}, 3);
    const auto r12 = partial_trace(state.rho, {1, 2}, 3);
    const auto r02 = partial_trace(state.rho, {0, 2}, 3);
    CHECK(max_abs_diff(r01, r12) <= 1e-12);
    CHECK(max_abs_diff(r01, r02) <= 1e-12);
}

TEST_CASE("three-site concurrence formula agrees with the Wootters route on the grid") {
    double dev = 0.0;
    for (double j : kGridJ)
        for (double b : kGridB)
            for (double t : kGridT) {
                const auto [rho, el] = rho12_three_site_uniform(j, b, t);
                dev = std::max(dev,
                               std::abs(concurrence_three_site(j, b, t) -
                                        concurrence(rho).concurrence));
                (void)el;
            }
    CHECK(dev <= 1e-9);
}

TEST_CASE("ferromagnetic three-site ring approaches concurrence 1/3 at low temperature") {
    CHECK(concurrence_three_site(-1.0, 0.0, 0.01) == doctest::Approx(1.0 / 3.0).epsilon(1e-3));
}

TEST_CASE("antiferromagnetic three-site ring is never entangled at zero field") {
    for (double t : {0.05, 0.2, 1.0, 5.0}) CHECK(concurrence_three_site(1.0, 0.0, t) == 0.0);
}

TEST_CASE("three-site concurrence vanishes above the transition") {
    CHECK(concurrence_three_site(-1.0, 0.0, 1.5) == 0.0);
}

TEST_CASE("a uniform field can entangle the antiferromagnetic ring") {
    // the zero-entanglement statement for J > 0 holds at B = 0 only
    const double c = concurrence_three_site(1.0, 1.0, 0.35);
    CHECK(c > 0.01);
    const double ed = concurrence_at(three_site_uniform_model(1.0, 1.0), {0, 1}, 0.35);
    CHECK(c == doctest::Approx(ed).epsilon(1e-9));
}

TEST_CASE("three-site entanglement condition") {
    CHECK(three_site_entanglement_condition(-1.0, 1.0));       // 1.0 < 1.27
    CHECK_FALSE(three_site_entanglement_condition(-1.0, 1.5)); // 1.5 > 1.27
    for (double t : {0.1, 1.0, 10.0}) CHECK_FALSE(three_site_entanglement_condition(1.0, t));
}

TEST_CASE("the condition root matches the cubic and the bisection scan") {
    const double a = cubic_root();
    const double tc_analytic = 1.0 / std::log(a);
    CHECK(tc_analytic == doctest::Approx(1.271).epsilon(1e-3));

    // condition flips exactly there
    CHECK(three_site_entanglement_condition(-1.0, tc_analytic - 1e-6));
    CHECK_FALSE(three_site_entanglement_condition(-1.0, tc_analytic + 1e-6));

    // and the ED bisection lands on the same temperature
    const auto result = find_critical_temperature(three_site_uniform_model(-1.0, 0.0), {0, 1},
                                                  0.5, 2.0, 1e-8);
    REQUIRE(result.t_c.has_value());
    CHECK(std::abs(*result.t_c - tc_analytic) <= 1e-6);
}

TEST_CASE("closed forms reject non-positive temperatures") {
    CHECK_THROWS_AS(rho12_two_site(1.0, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(concurrence_two_site(1.0, 0.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(rho12_three_site_uniform(1.0, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(concurrence_three_site(1.0, 0.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(three_site_entanglement_condition(1.0, 0.0), std::domain_error);
}

TEST_CASE("convention factories") {
    const auto two = two_site_model(1.5, 1.0);
    CHECK(two.fields == std::vector<double>{0.5, 0.5});
    const auto three = three_site_uniform_model(1.5, 1.0);
    CHECK(three.fields == std::vector<double>{1.0, 1.0, 1.0});
    const auto imp = three_site_impurity_model(-2.0, 3.0);
    CHECK(imp.fields == std::vector<double>{0.0, 0.0, 6.0});
}

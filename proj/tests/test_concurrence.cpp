#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "spinring/closed_form.hpp"
#include "spinring/concurrence.hpp"
#include "spinring/linalg.hpp"
#include "test_support.hpp"

using namespace spinring;
using namespace spinring::testing;

TEST_CASE("spin flip of the maximally mixed state") {
    const ComplexMatrix rho = ComplexMatrix::identity(4) * 0.25;
    CHECK(max_abs_diff(spin_flip(rho), ComplexMatrix::identity(4) * (1.0 / 16.0)) <= 1e-14);
}

TEST_CASE("the singlet is spin-flip invariant") {
    const ComplexMatrix rho = projector(bell_singlet());
    CHECK(max_abs_diff(spin_flip(rho), rho) <= 1e-13);
}

TEST_CASE("spin flip of |00><00| vanishes") {
    ComplexMatrix rho(4);
    rho(0, 0) = 1.0;
    CHECK(spin_flip(rho).max_abs() <= 1e-14);
}

TEST_CASE("spin flip validates its input") {
    ComplexMatrix not_normalized = ComplexMatrix::identity(4);
    CHECK_THROWS_WITH_AS(spin_flip(not_normalized), doctest::Contains("trace"),
                         std::invalid_argument);
    ComplexMatrix not_hermitian(4);
    not_hermitian(0, 0) = 1.0;
    not_hermitian(0, 1) = Complex(0.3, 0.0);
    CHECK_THROWS_WITH_AS(spin_flip(not_hermitian), doctest::Contains("Hermitian"),
                         std::invalid_argument);
    ComplexMatrix not_psd(4);
    not_psd(0, 0) = 1.5;
    not_psd(1, 1) = -0.5;
    CHECK_THROWS_WITH_AS(spin_flip(not_psd), doctest::Contains("semidefinite"),
                         std::invalid_argument);
    CHECK_THROWS_AS(spin_flip(ComplexMatrix::identity(2)), std::invalid_argument);
}

TEST_CASE("Bell state concurrence is 1") {
    const auto report = concurrence(projector(bell_singlet()));
    CHECK(report.concurrence == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(report.lambdas[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(report.lambdas[1] <= 1e-8);
}

TEST_CASE("product and maximally mixed states have zero concurrence") {
    ComplexMatrix product(4);
    product(0, 0) = 1.0;
    CHECK(concurrence(product).concurrence == 0.0);
    CHECK(concurrence(ComplexMatrix::identity(4) * 0.25).concurrence == 0.0);
}

TEST_CASE("thermal two-site state concurrence matches the closed form at J=1, B=0, T=1") {
    // (sinh 1 - 1)/(cosh 1 + 1)
    const double expected = (std::sinh(1.0) - 1.0) / (std::cosh(1.0) + 1.0);
    const auto report = concurrence(rho12_two_site(1.0, 0.0, 1.0));
    CHECK(report.concurrence == doctest::Approx(expected).epsilon(1e-10));
    CHECK(report.concurrence == doctest::Approx(0.06890).epsilon(2e-4));
}

TEST_CASE("concurrence report lambdas are sorted and clamped") {
    std::mt19937 gen(67);
    for (int rep = 0; rep < 50; ++rep) {
        const auto report = concurrence(random_density_matrix(4, gen));
        for (int i = 0; i < 3; ++i) CHECK(report.lambdas[i] >= report.lambdas[i + 1]);
        CHECK(report.lambdas[3] >= 0.0);
        CHECK(report.concurrence == std::max(report.raw, 0.0));
        CHECK(report.concurrence <= 1.0);
    }
}

TEST_CASE("pure state concurrence examples") {
    CHECK(pure_concurrence(bell_singlet()) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(pure_concurrence({1.0, 0.0, 0.0, 0.0}) == 0.0);
    for (double theta : {0.1, 0.5, 1.0, 1.4}) {
        const std::vector<Complex> psi = {std::cos(theta), 0.0, 0.0, std::sin(theta)};
        CHECK(pure_concurrence(psi) ==
              doctest::Approx(std::abs(std::sin(2.0 * theta))).epsilon(1e-12));
    }
}

TEST_CASE("pure state concurrence requires a normalized vector") {
    CHECK_THROWS_AS(pure_concurrence({1.0, 1.0, 0.0, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(pure_concurrence({1.0, 0.0}), std::invalid_argument);
}

TEST_CASE("mixed-state route agrees with the pure-state oracle on 200 random states") {
    std::mt19937 gen(71);
    for (int rep = 0; rep < 200; ++rep) {
        const auto psi = random_pure_state(4, gen);
        const double via_oracle = pure_concurrence(psi);
        const double via_mixed = concurrence(projector(psi)).concurrence;
        CHECK(std::abs(via_oracle - via_mixed) <= 1e-9);
    }
}

TEST_CASE("concurrence is invariant under local unitaries") {
    std::mt19937 gen(73);
    for (int rep = 0; rep < 200; ++rep) {
        const auto rho = random_density_matrix(4, gen);
        const auto u = kron(random_unitary2(gen), random_unitary2(gen));
        const ComplexMatrix rotated = u * rho * u.adjoint();
        CHECK(std::abs(concurrence(rotated).concurrence - concurrence(rho).concurrence) <= 1e-9);
    }
}

TEST_CASE("convex mixtures of product states are separable") {
    std::mt19937 gen(79);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int rep = 0; rep < 50; ++rep) {
        ComplexMatrix rho(4);
        std::vector<double> weights;
        double total = 0.0;
        const int terms = 2 + static_cast<int>(u01(gen) * 3);
        for (int k = 0; k < terms; ++k) {
            weights.push_back(u01(gen) + 1e-3);
            total += weights.back();
        }
        for (int k = 0; k < terms; ++k) {
            const auto a = random_pure_state(2, gen);
            const auto b = random_pure_state(2, gen);
            std::vector<Complex> psi(4);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) psi[2 * i + j] = a[i] * b[j];
            rho += (weights[static_cast<std::size_t>(k)] / total) * projector(psi);
        }
        CHECK(concurrence(rho).concurrence <= 1e-9);
    }
}

TEST_CASE("spin-flip spectrum reconciles with the characteristic polynomial") {
    // the Hermitian-route lambdas squared must be roots of det(rho_flip - x I)
    std::mt19937 gen(83);
    for (int rep = 0; rep < 200; ++rep) {
        const auto rho = random_density_matrix(4, gen);
        const auto report = concurrence(rho);
        const ComplexMatrix product = spin_flip(rho);
        for (double lambda : report.lambdas) {
            ComplexMatrix shifted = product;
            shifted -= ComplexMatrix::identity(4) * (lambda * lambda);
            CHECK(std::abs(determinant(shifted)) <= 1e-8);
        }
    }
}

TEST_CASE("binary entropy endpoints and symmetry") {
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(binary_entropy(0.3) == doctest::Approx(binary_entropy(0.7)).epsilon(1e-12));
}

TEST_CASE("entanglement of formation endpoints and reference value") {
    CHECK(entanglement_of_formation(0.0) == 0.0);
    CHECK(entanglement_of_formation(1.0) == doctest::Approx(1.0).epsilon(1e-12));
    // binary entropy at (1 + sqrt(3)/2)/2 = 0.9330...
    CHECK(entanglement_of_formation(0.5) == doctest::Approx(0.3546).epsilon(2e-4));
}

TEST_CASE("entanglement of formation is monotone in the concurrence") {
    double prev = -1.0;
    for (int k = 0; k <= 100; ++k) {
        const double c = k / 100.0;
        const double e = entanglement_of_formation(c);
        CHECK(e >= prev);
        CHECK(e >= 0.0);
        CHECK(e <= 1.0);
        prev = e;
    }
}

TEST_CASE("entanglement of formation rejects out-of-range input") {
    CHECK_THROWS_AS(entanglement_of_formation(-0.1), std::domain_error);
    CHECK_THROWS_AS(entanglement_of_formation(1.1), std::domain_error);
}

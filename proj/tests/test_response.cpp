// Copyright 2026 The weakval authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "support.hpp"
#include "weakval/response.hpp"

using namespace weakval;
using namespace weakval::response;
using hilbert::SpectralObservable;
using hilbert::StateVector;
using hilbert::inner;
namespace ts = testsupport;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("transition_probability") {
    const StateVector i = ts::qubit_initial();
    const StateVector f = ts::qubit_final();
    const auto sz = ts::pauli_z_observable();

    SUBCASE("phi = 0 is the bare overlap probability") {
        CHECK(transition_probability(i, f, sz, 0.0) ==
              doctest::Approx(std::norm(inner(f, i))).epsilon(1e-14));
    }

    SUBCASE("identity generator is flat") {
        const auto id = SpectralObservable::identity(2);
        const double p0 = transition_probability(i, f, id, 0.0);
        for (double phi : {-2.0, 0.1, 3.0}) {
            CHECK(transition_probability(i, f, id, phi) ==
                  doctest::Approx(p0).epsilon(1e-13));
        }
    }

    SUBCASE("qubit closed form (1 + sin 2phi)/2") {
        for (int j = 0; j <= 50; ++j) {
            const double phi = -kPi + 2.0 * kPi * j / 50.0;
            CHECK(std::abs(transition_probability(i, f, sz, phi) -
                           0.5 * (1.0 + std::sin(2.0 * phi))) < 1e-12);
        }
    }
}

TEST_CASE("imaginary_weak_value_fd") {
    const StateVector i = ts::qubit_initial();
    const StateVector f = ts::qubit_final();
    const auto sz = ts::pauli_z_observable();

    SUBCASE("qubit pair: Im weak value 1 to O(step^2)") {
        CHECK(std::abs(imaginary_weak_value_fd(i, f, sz, 1e-3) - 1.0) < 1e-5);
    }

    SUBCASE("stationary when |f> = |i> is an eigenstate") {
        const StateVector e0 = StateVector::basis_state(2, 0);
        CHECK(std::abs(imaginary_weak_value_fd(e0, e0, sz, 1e-3)) < 1e-10);
    }

    SUBCASE("identity generator gives a flat response") {
        const auto id = SpectralObservable::identity(2);
        CHECK(std::abs(imaginary_weak_value_fd(i, f, id, 1e-3)) < 1e-10);
    }

    SUBCASE("agrees with the analytic imaginary part on random draws") {
        auto gen = ts::rng(201);
        int tested = 0;
        for (int round = 0; round < 40 && tested < 10; ++round) {
            const int dim = 2 + static_cast<int>(gen() % 7);
            const auto g = ts::random_unit_observable(dim, gen);
            const StateVector a = ts::random_test_state(dim, gen);
            const StateVector b = ts::random_test_state(dim, gen);
            if (std::norm(inner(b, a)) <= 0.05) {
                continue;
            }
            ++tested;
            const double analytic =
                weakstats::weak_value(g, a, b).imag();
            CHECK(std::abs(imaginary_weak_value_fd(a, b, g, 1e-3) -
                           analytic) < 1e-5);
        }
        CHECK(tested == 10);
    }

    SUBCASE("second-order convergence: halving the step quarters the error") {
        auto gen = ts::rng(202);
        int tested = 0;
        for (int round = 0; round < 60 && tested < 10; ++round) {
            const int dim = 2 + static_cast<int>(gen() % 7);
            const auto g = ts::random_unit_observable(dim, gen);
            const StateVector a = ts::random_test_state(dim, gen);
            const StateVector b = ts::random_test_state(dim, gen);
            if (std::norm(inner(b, a)) <= 0.05) {
                continue;
            }
            const double analytic = weakstats::weak_value(g, a, b).imag();
            const double coarse =
                std::abs(imaginary_weak_value_fd(a, b, g, 1e-2) - analytic);
            const double fine =
                std::abs(imaginary_weak_value_fd(a, b, g, 5e-3) - analytic);
            if (coarse < 1e-8) {
                // Nearly vanishing third derivative: the ratio is noise.
                continue;
            }
            ++tested;
            const double ratio = coarse / fine;
            CHECK(ratio > 3.5);
            CHECK(ratio < 4.5);
        }
        CHECK(tested >= 8);
    }

    SUBCASE("orthogonal post-selection raises before probing") {
        CHECK_THROWS_AS(imaginary_weak_value_fd(
                            StateVector::basis_state(2, 0),
                            StateVector::basis_state(2, 1), sz, 1e-3),
                        OrthogonalPostselection);
    }

    SUBCASE("exact response zeros underflow the log probe") {
        // Diagonal generator keeps |0> and |1> orthogonal for every phi, so
        // both probes are exactly zero: an underflow, not a post-selection
        // failure, because log_derivative has no p(f;0) gate.
        const auto diag = SpectralObservable::diagonal({0.0, 1.0});
        CHECK_THROWS_AS(log_derivative(StateVector::basis_state(2, 0),
                                       StateVector::basis_state(2, 1), diag,
                                       0.0, 1e-3),
                        NumericalUnderflow);
    }

    SUBCASE("rejects nonpositive steps") {
        CHECK_THROWS_AS(imaginary_weak_value_fd(i, f, sz, 0.0),
                        std::invalid_argument);
    }
}

TEST_CASE("response_curve") {
    const StateVector i = ts::qubit_initial();
    const StateVector f = ts::qubit_final();
    const auto sz = ts::pauli_z_observable();

    SUBCASE("steps = 2 gives the endpoints") {
        const ResponseCurve curve = response_curve(i, f, sz, -1.0, 2.0, 2);
        REQUIRE(curve.phis.size() == 2);
        CHECK(curve.phis[0] == -1.0);
        CHECK(curve.phis[1] == 2.0);
    }

    SUBCASE("identity generator gives a constant curve") {
        const auto id = SpectralObservable::identity(2);
        const ResponseCurve curve = response_curve(i, f, id, -kPi, kPi, 11);
        for (double p : curve.probabilities) {
            CHECK(p == doctest::Approx(curve.probabilities[0]).epsilon(1e-13));
        }
    }

    SUBCASE("qubit curve matches the closed form pointwise") {
        const ResponseCurve curve = response_curve(i, f, sz, -kPi, kPi, 101);
        REQUIRE(curve.phis.size() == 101);
        for (std::size_t j = 0; j < curve.phis.size(); ++j) {
            const double expected =
                0.5 * (1.0 + std::sin(2.0 * curve.phis[j]));
            CHECK(std::abs(curve.probabilities[j] - expected) < 1e-12);
            CHECK(curve.probabilities[j] > -1e-12);
            CHECK(curve.probabilities[j] < 1.0 + 1e-12);
        }
    }

    SUBCASE("every sample satisfies the reconstruction identity") {
        auto gen = ts::rng(203);
        const int dim = 5;
        const auto g =
            hilbert::spectral_decompose(ts::random_hermitian(dim, gen));
        const StateVector a = ts::random_test_state(dim, gen);
        const StateVector b = ts::random_test_state(dim, gen);
        const auto base = weakstats::weak_conditional_distribution(g, a, b);
        const double p0 = std::norm(inner(b, a));
        const ResponseCurve curve = response_curve(a, b, g, -kPi, kPi, 101);
        for (std::size_t j = 0; j < curve.phis.size(); ++j) {
            const double rebuilt = weakstats::reconstruct_output_probability(
                base, g.eigenvalues(), curve.phis[j], p0);
            CHECK(std::abs(curve.probabilities[j] - rebuilt) < 1e-10);
        }
    }

    SUBCASE("integer spectra are 2pi-periodic") {
        const auto g = SpectralObservable::diagonal({-2.0, 1.0, 3.0});
        auto gen = ts::rng(204);
        const StateVector a = ts::random_test_state(3, gen);
        const StateVector b = ts::random_test_state(3, gen);
        for (double phi : {-2.0, -0.3, 0.9, 2.8}) {
            CHECK(std::abs(transition_probability(a, b, g, phi + 2.0 * kPi) -
                           transition_probability(a, b, g, phi)) < 1e-12);
        }
    }

    SUBCASE("invalid grids raise") {
        CHECK_THROWS_AS(response_curve(i, f, sz, 0.0, 1.0, 1), InvalidRange);
        CHECK_THROWS_AS(response_curve(i, f, sz, 1.0, 1.0, 5), InvalidRange);
        CHECK_THROWS_AS(response_curve(i, f, sz, 2.0, -2.0, 5), InvalidRange);
    }
}

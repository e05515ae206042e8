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

#include "weakval/response.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace weakval::response {

namespace {

// Physical zeros of p(f;φ) must surface as errors, never as clamped logs.
constexpr double kLogFloor = 1e-300;

double checked_log(double p, double phi) {
    if (p < kLogFloor) {
        throw NumericalUnderflow(
            "transition probability underflows at phi = " +
            std::to_string(phi));
    }
    return std::log(p);
}

} // namespace

double transition_probability(const StateVector& i, const StateVector& f,
                              const SpectralObservable& g, double phi) {
    return std::norm(hilbert::inner(f, hilbert::evolve(g, phi, i)));
}

double imaginary_weak_value_fd(const StateVector& i, const StateVector& f,
                               const SpectralObservable& g, double step,
                               double epsilon) {
    if (!(step > 0.0)) {
        throw std::invalid_argument("imaginary_weak_value_fd: step must be > 0");
    }
    const double p0 = transition_probability(i, f, g, 0.0);
    if (p0 < epsilon * epsilon) {
        throw OrthogonalPostselection(
            "imaginary_weak_value_fd: p(f;0) = " + std::to_string(p0) +
            " is orthogonal within epsilon");
    }
    return log_derivative(i, f, g, 0.0, step);
}

double log_derivative(const StateVector& i, const StateVector& f,
                      const SpectralObservable& g, double phi, double step) {
    if (!(step > 0.0)) {
        throw std::invalid_argument("log_derivative: step must be > 0");
    }
    const double p_plus = transition_probability(i, f, g, phi + step);
    const double p_minus = transition_probability(i, f, g, phi - step);
    // (1/2)·[ln p(φ+h) − ln p(φ−h)] / (2h)
    return (checked_log(p_plus, phi + step) -
            checked_log(p_minus, phi - step)) /
           (4.0 * step);
}

ResponseCurve response_curve(const StateVector& i, const StateVector& f,
                             const SpectralObservable& g, double phi_min,
                             double phi_max, int steps) {
    if (steps < 2 || !(phi_min < phi_max)) {
        throw InvalidRange("response_curve: need steps >= 2 and "
                           "phi_min < phi_max");
    }
    ResponseCurve curve;
    curve.generator_eigenvalues = g.eigenvalues();
    curve.phis.resize(static_cast<std::size_t>(steps));
    curve.probabilities.resize(static_cast<std::size_t>(steps));
    const double width = phi_max - phi_min;
    for (int j = 0; j < steps; ++j) {
        const double phi =
            (j == steps - 1)
                ? phi_max
                : phi_min + width * static_cast<double>(j) /
                                static_cast<double>(steps - 1);
        curve.phis[static_cast<std::size_t>(j)] = phi;
        curve.probabilities[static_cast<std::size_t>(j)] =
            transition_probability(i, f, g, phi);
    }
    return curve;
}

} // namespace weakval::response

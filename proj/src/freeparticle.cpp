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

#include "weakval/freeparticle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace weakval::freeparticle {

using hilbert::inner;
using hilbert::principal_arg;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kChirpResidualCap = 0.05;
constexpr double kZeroValueFloor = 1e-300;

int nearest_index(const std::vector<double>& xs, double x) {
    const double dx = xs[1] - xs[0];
    long k = std::lround((x - xs.front()) / dx);
    if (k < 0) {
        k = 0;
    }
    if (k >= static_cast<long>(xs.size())) {
        k = static_cast<long>(xs.size()) - 1;
    }
    return static_cast<int>(k);
}

// Index of the grid point nearest x = 0; the exact tie between the two
// center cells resolves to the lower index.
int anchor_index(const std::vector<double>& xs) {
    int best = 0;
    for (int k = 1; k < static_cast<int>(xs.size()); ++k) {
        if (std::abs(xs[static_cast<std::size_t>(k)]) <
            std::abs(xs[static_cast<std::size_t>(best)])) {
            best = k;
        }
    }
    return best;
}

// Nearest-multiple-of-2π continuity scan outward from the anchor.
std::vector<double> unwrap_from_anchor(const std::vector<double>& principal,
                                       int anchor) {
    const double two_pi = 2.0 * kPi;
    std::vector<double> out(principal.size());
    out[static_cast<std::size_t>(anchor)] =
        principal[static_cast<std::size_t>(anchor)];
    for (int k = anchor + 1; k < static_cast<int>(principal.size()); ++k) {
        const double prev = out[static_cast<std::size_t>(k - 1)];
        const double raw = principal[static_cast<std::size_t>(k)];
        out[static_cast<std::size_t>(k)] =
            raw + two_pi * std::round((prev - raw) / two_pi);
    }
    for (int k = anchor - 1; k >= 0; --k) {
        const double prev = out[static_cast<std::size_t>(k + 1)];
        const double raw = principal[static_cast<std::size_t>(k)];
        out[static_cast<std::size_t>(k)] =
            raw + two_pi * std::round((prev - raw) / two_pi);
    }
    return out;
}

ConditionalDensity density_from_numerators(const FreeParticleScene& scene,
                                           const std::vector<Complex>& nums,
                                           Complex overlap, double epsilon) {
    if (std::abs(overlap) < epsilon) {
        throw OrthogonalPostselection(
            "conditional density: post-selection overlap vanishes");
    }
    const double dx = scene.config.dx();
    ConditionalDensity d;
    d.xs = scene.xs;
    d.values.resize(nums.size());
    std::vector<double> principal(nums.size());
    for (std::size_t k = 0; k < nums.size(); ++k) {
        d.values[k] = nums[k] / overlap / dx;
        principal[k] = principal_arg(d.values[k]);
    }
    d.phase_unwrapped = unwrap_from_anchor(principal, anchor_index(d.xs));
    return d;
}

} // namespace

void FreeParticleConfig::validate() const {
    if (!(mass > 0.0) || !(hbar > 0.0) || !(tau > 0.0) || !(length > 0.0)) {
        throw std::invalid_argument(
            "free-particle config: mass, hbar, tau, length must be > 0");
    }
    if (points < 16 || points % 2 != 0) {
        throw std::invalid_argument(
            "free-particle config: points must be even and >= 16");
    }
    if (!(edge_phase_step() < kPi)) {
        throw AliasedGrid("grid aliases the chirp phases: edge phase step " +
                          std::to_string(edge_phase_step()) +
                          " rad >= pi; increase points or shrink length");
    }
}

FreeParticleScene build_scene(const FreeParticleConfig& config) {
    config.validate();
    const int n = config.points;
    const double dx = config.dx();
    const double chirp_rate = config.mass / (config.hbar * config.tau);
    const double amp = 1.0 / std::sqrt(static_cast<double>(n));

    FreeParticleScene scene{config,
                            std::vector<double>(static_cast<std::size_t>(n)),
                            StateVector::basis_state(1, 0),
                            StateVector::basis_state(1, 0)};
    std::vector<Complex> fwd(static_cast<std::size_t>(n));
    std::vector<Complex> bwd(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const double x = -config.length / 2.0 + (k + 0.5) * dx;
        scene.xs[static_cast<std::size_t>(k)] = x;
        const double phase = chirp_rate * x * x;
        fwd[static_cast<std::size_t>(k)] = std::polar(amp, phase);
        bwd[static_cast<std::size_t>(k)] = std::polar(amp, -phase);
    }
    scene.i_state = StateVector(std::move(fwd));
    scene.f_state = StateVector(std::move(bwd));

    // The sampled chirp must still solve (x̂ − (τ/2m)·P̂)|i⟩ = 0 with the
    // momentum realized by central differences; the check is restricted to
    // the central half-grid where the interior stencil is meaningful.
    const double p_scale = config.tau / (2.0 * config.mass);
    double residual_sq = 0.0;
    double reference_sq = 0.0;
    for (int k = 1; k < n - 1; ++k) {
        const double x = scene.xs[static_cast<std::size_t>(k)];
        if (std::abs(x) > config.length / 4.0) {
            continue;
        }
        const Complex derivative =
            (scene.i_state[k + 1] - scene.i_state[k - 1]) / (2.0 * dx);
        const Complex momentum = Complex{0.0, -config.hbar} * derivative;
        const Complex residual = x * scene.i_state[k] - p_scale * momentum;
        residual_sq += std::norm(residual);
        reference_sq += std::norm(x * scene.i_state[k]);
    }
    scene.chirp_residual = std::sqrt(residual_sq / reference_sq);
    if (!(scene.chirp_residual < kChirpResidualCap)) {
        throw AliasedGrid(
            "grid too coarse for the chirp eigenrelation: residual " +
            std::to_string(scene.chirp_residual));
    }
    return scene;
}

Complex continuum_overlap(const FreeParticleConfig& c) {
    const double magnitude =
        std::sqrt(kPi * c.hbar * c.tau / (2.0 * c.mass)) / c.length;
    return std::polar(magnitude, kPi / 4.0);
}

ConditionalDensity numeric_conditional_density(const FreeParticleScene& scene,
                                               Normalization mode,
                                               double epsilon) {
    const int n = scene.config.points;
    std::vector<Complex> nums(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        nums[static_cast<std::size_t>(k)] =
            std::conj(scene.f_state[k]) * scene.i_state[k];
    }
    const Complex overlap = (mode == Normalization::numeric)
                                ? inner(scene.f_state, scene.i_state)
                                : continuum_overlap(scene.config);
    return density_from_numerators(scene, nums, overlap, epsilon);
}

Complex analytic_conditional_density(double x, const FreeParticleConfig& c) {
    const double magnitude =
        std::sqrt(2.0 * c.mass / (kPi * c.hbar * c.tau));
    const double phase =
        2.0 * c.mass * x * x / (c.hbar * c.tau) - kPi / 4.0;
    return std::polar(magnitude, phase);
}

std::vector<double> action_profile(const ConditionalDensity& d,
                                   const FreeParticleConfig& c) {
    std::vector<double> action(d.phase_unwrapped.size());
    for (std::size_t k = 0; k < d.values.size(); ++k) {
        if (std::abs(d.values[k]) < kZeroValueFloor) {
            throw ZeroAmplitude("action_profile: density vanishes at x = " +
                                std::to_string(d.xs[k]));
        }
        action[k] = c.hbar * d.phase_unwrapped[k];
    }
    return action;
}

double momentum_transfer(const ConditionalDensity& d, double x,
                         const FreeParticleConfig& c) {
    if (std::abs(x) > c.length / 4.0) {
        throw OutOfRange("momentum_transfer: x = " + std::to_string(x) +
                         " outside the central half of the grid");
    }
    const int k = nearest_index(d.xs, x);
    if (k < 1 || k >= static_cast<int>(d.xs.size()) - 1) {
        throw OutOfRange("momentum_transfer: no interior stencil at x = " +
                         std::to_string(x));
    }
    const double gradient =
        (d.phase_unwrapped[static_cast<std::size_t>(k + 1)] -
         d.phase_unwrapped[static_cast<std::size_t>(k - 1)]) /
        (2.0 * d.dx());
    return c.hbar * gradient;
}

ConditionalDensity apply_kick(const FreeParticleScene& scene, double delta_p,
                              Normalization mode, double epsilon) {
    const FreeParticleConfig& c = scene.config;
    const int n = c.points;
    std::vector<Complex> nums(static_cast<std::size_t>(n));
    Complex kicked_overlap{0.0, 0.0};
    for (int k = 0; k < n; ++k) {
        const double x = scene.xs[static_cast<std::size_t>(k)];
        const Complex term = std::conj(scene.f_state[k]) * scene.i_state[k] *
                             std::polar(1.0, -delta_p * x / c.hbar);
        nums[static_cast<std::size_t>(k)] = term;
        kicked_overlap += term;
    }
    if (mode == Normalization::analytic) {
        // The kick only rotates the continuum overlap: the stationary point
        // moves to x₀ = Δp·τ/(4m) and the Fresnel sum picks up e^{−i·a·x₀²}
        // with a = 2m/(ħτ).
        const double x0 = classical_kick_center(delta_p, c);
        const double rotation =
            2.0 * c.mass * x0 * x0 / (c.hbar * c.tau);
        kicked_overlap =
            continuum_overlap(c) * std::polar(1.0, -rotation);
    }
    return density_from_numerators(scene, nums, kicked_overlap, epsilon);
}

double positivity_boundary(const FreeParticleConfig& c) {
    return std::sqrt(3.0 * kPi * c.hbar * c.tau / (8.0 * c.mass));
}

double tail_cancellation(const ConditionalDensity& d, double cutoff_x) {
    const double half_span = std::abs(d.xs.back()) + d.dx() / 2.0;
    if (cutoff_x < 0.0 || cutoff_x >= half_span) {
        throw OutOfRange("tail_cancellation: cutoff " +
                         std::to_string(cutoff_x) + " outside the grid");
    }
    Complex tail{0.0, 0.0};
    for (std::size_t k = 0; k < d.values.size(); ++k) {
        if (std::abs(d.xs[k]) > cutoff_x) {
            tail += d.values[k];
        }
    }
    return std::abs(tail) * d.dx();
}

double classical_kick_center(double delta_p, const FreeParticleConfig& c) {
    return delta_p * c.tau / (4.0 * c.mass);
}

double stationary_phase_point(const ConditionalDensity& d) {
    int best = 1;
    double best_slope = std::abs(d.phase_unwrapped[2] - d.phase_unwrapped[0]);
    for (int k = 2; k < static_cast<int>(d.xs.size()) - 1; ++k) {
        const double slope =
            std::abs(d.phase_unwrapped[static_cast<std::size_t>(k + 1)] -
                     d.phase_unwrapped[static_cast<std::size_t>(k - 1)]);
        if (slope < best_slope) {
            best_slope = slope;
            best = k;
        }
    }
    return d.xs[static_cast<std::size_t>(best)];
}

} // namespace weakval::freeparticle

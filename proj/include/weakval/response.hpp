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

#pragma once

#include <vector>

#include "weakval/hilbert.hpp"
#include "weakval/weakstats.hpp"

namespace weakval::response {

using hilbert::SpectralObservable;
using hilbert::StateVector;

/// Sampled transition-probability curve φ → p(f;φ) = |⟨f|Û(φ)|i⟩|².
struct ResponseCurve {
    std::vector<double> phis;
    std::vector<double> probabilities;
    std::vector<double> generator_eigenvalues;
};

/// p(f;φ) = |⟨f|Û(φ)|i⟩|².
double transition_probability(const StateVector& i, const StateVector& f,
                              const SpectralObservable& g, double phi);

/// Central finite difference of (1/2)·∂_φ ln p(f;φ) at φ = 0. Converges to
/// the imaginary weak value of the generator at O(step²).
double imaginary_weak_value_fd(const StateVector& i, const StateVector& f,
                               const SpectralObservable& g, double step,
                               double epsilon =
                                   weakstats::kDefaultOrthEpsilon);

/// Same central difference of the half-log-slope taken at an arbitrary φ.
double log_derivative(const StateVector& i, const StateVector& f,
                      const SpectralObservable& g, double phi, double step);

/// Uniform inclusive grid of transition probabilities over
/// [phi_min, phi_max].
ResponseCurve response_curve(const StateVector& i, const StateVector& f,
                             const SpectralObservable& g, double phi_min,
                             double phi_max, int steps);

} // namespace weakval::response

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

#include <span>
#include <utility>
#include <vector>

#include "weakval/hilbert.hpp"

namespace weakval::weakstats {

using hilbert::SpectralObservable;
using hilbert::StateVector;

/// Overlaps below this threshold make post-selected statistics undefined.
/// Weak values diverge as ⟨f|i⟩ → 0, so the cutoff is configurable per call.
inline constexpr double kDefaultOrthEpsilon = 1e-12;

/// Complex conditional quasiprobability p(m|if), optionally evaluated after
/// a generated unitary with parameter phi (phi == 0 is the plain
/// distribution). Values sum to exactly 1 by construction.
struct QuasiProbDistribution {
    std::vector<int> basis_labels;
    std::vector<Complex> values;
    double phi = 0.0;

    Complex sum() const;
};

/// Unitary that is diagonal in a fixed orthonormal basis: applies the phase
/// e^{−i·phases[m]} to the m-th basis component. An empty basis means the
/// computational basis, which keeps grid-sized problems O(dim).
class DiagonalUnitary {
  public:
    DiagonalUnitary(std::vector<StateVector> basis,
                    std::vector<double> phases);
    static DiagonalUnitary computational(int dim, std::vector<double> phases);

    StateVector apply(const StateVector& s) const;

    int dim() const { return dim_; }
    const std::vector<double>& phases() const { return phases_; }
    bool uses_computational_basis() const { return basis_.empty(); }
    const std::vector<StateVector>& basis() const { return basis_; }

  private:
    DiagonalUnitary() = default;

    int dim_ = 0;
    std::vector<StateVector> basis_; // empty => computational basis
    std::vector<double> phases_;    // each in (−π, π]
};

/// Three states with the phase and magnitude of their overlap product
/// ⟨f|m⟩⟨m|i⟩⟨i|f⟩. The phase (the tension) is invariant under cyclic
/// permutations and negates under transpositions, both bit for bit.
struct TensionTriad {
    StateVector i;
    StateVector m;
    StateVector f;
    double tension;           // radians, in (−π, π]
    double overlap_magnitude; // |⟨f|m⟩⟨m|i⟩⟨i|f⟩|
};

struct MaxTransitionResult {
    DiagonalUnitary unitary;
    double achieved_probability;
};

/// ⟨f|Â|i⟩ / ⟨f|i⟩.
Complex weak_value(const SpectralObservable& a, const StateVector& i,
                   const StateVector& f,
                   double epsilon = kDefaultOrthEpsilon);

/// p(m|if) = ⟨f|m⟩⟨m|i⟩ / ⟨f|i⟩ over the observable's eigenbasis.
QuasiProbDistribution weak_conditional_distribution(
    const SpectralObservable& basis, const StateVector& i,
    const StateVector& f, double epsilon = kDefaultOrthEpsilon);

/// Same over an explicit orthonormal basis list (must be complete).
QuasiProbDistribution weak_conditional_distribution(
    std::span<const StateVector> basis, const StateVector& i,
    const StateVector& f, double epsilon = kDefaultOrthEpsilon);

/// Σ_m A_m·p(m|if); equals weak_value(a, i, f) as an algebraic identity.
Complex reconstruct_weak_value(std::span<const double> eigenvalues,
                               const QuasiProbDistribution& d);

/// p(m|if;φ) = ⟨f|m⟩⟨m|i⟩·e^{−iφA_m} / ⟨f|Û(φ)|i⟩. Throws
/// OrthogonalPostselection when φ sits on a zero of the response curve.
QuasiProbDistribution shifted_distribution(const SpectralObservable& basis,
                                           double phi, const StateVector& i,
                                           const StateVector& f,
                                           double epsilon =
                                               kDefaultOrthEpsilon);

/// |Σ_m e^{−iφA_m}·p(m|if;0)|² · p(f;0): the output probability at φ
/// rebuilt purely from the φ = 0 quasiprobabilities.
double reconstruct_output_probability(const QuasiProbDistribution& d0,
                                      std::span<const double> eigenvalues,
                                      double phi, double p_f0);

/// Phase and magnitude of ⟨f|m⟩⟨m|i⟩⟨i|f⟩.
TensionTriad logical_tension(const StateVector& i, const StateVector& m,
                             const StateVector& f);

/// The basis-diagonal unitary maximizing |⟨f|Û|i⟩|²: phases[m] =
/// Arg(⟨f|m⟩⟨m|i⟩) (0 where the term vanishes), achieved probability
/// (Σ_m |⟨f|m⟩⟨m|i⟩|)².
MaxTransitionResult max_transition_unitary(std::span<const StateVector> basis,
                                           const StateVector& i,
                                           const StateVector& f,
                                           double epsilon =
                                               kDefaultOrthEpsilon);

MaxTransitionResult max_transition_unitary(const SpectralObservable& basis,
                                           const StateVector& i,
                                           const StateVector& f,
                                           double epsilon =
                                               kDefaultOrthEpsilon);

/// Computational-basis fast path: O(dim) time and memory, no basis vectors
/// materialized. This is the one to use on position grids.
MaxTransitionResult max_transition_unitary_computational(
    const StateVector& i, const StateVector& f,
    double epsilon = kDefaultOrthEpsilon);

} // namespace weakval::weakstats

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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "weakval/errors.hpp"

namespace weakval {

using Complex = std::complex<double>;

namespace hilbert {

/// Largest matrix dimension accepted by spectral_decompose.
inline constexpr int kMaxSpectralDim = 64;

/// Normalized state over a finite orthonormal basis. Amplitudes are
/// immutable after construction.
class StateVector {
  public:
    /// Wraps amplitudes that already carry unit l2 norm (checked to 1e-9).
    explicit StateVector(std::vector<Complex> amplitudes);

    /// Scales a raw amplitude sequence to unit norm.
    static StateVector normalize(std::vector<Complex> raw);

    /// The k-th computational basis state of the given dimension.
    static StateVector basis_state(int dim, int index);

    int dim() const { return static_cast<int>(amplitudes_.size()); }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }
    const Complex& operator[](int k) const {
        return amplitudes_[static_cast<std::size_t>(k)];
    }

  private:
    std::vector<Complex> amplitudes_;
};

/// ⟨a|b⟩ = Σ_k conj(a_k)·b_k. Conjugate-symmetric bit for bit:
/// inner(a, b) == conj(inner(b, a)).
Complex inner(const StateVector& a, const StateVector& b);

/// True when every pair satisfies |⟨e_j|e_k⟩ − δ_jk| < tol.
bool is_orthonormal(std::span<const StateVector> states, double tol = 1e-10);

/// Square matrix with entries[j][k] == conj(entries[k][j]). Input is
/// symmetrized to (H + H†)/2 on construction, which tolerates serialization
/// round-trip noise.
class HermitianMatrix {
  public:
    /// Row-major entries; size must be dim*dim.
    HermitianMatrix(int dim, std::vector<Complex> entries);

    static HermitianMatrix identity(int dim);
    static HermitianMatrix from_diagonal(const std::vector<double>& diagonal);

    int dim() const { return dim_; }
    const Complex& at(int row, int col) const {
        return entries_[static_cast<std::size_t>(row) * dim_ + col];
    }
    const std::vector<Complex>& entries() const { return entries_; }
    double frobenius_norm() const;

    bool operator==(const HermitianMatrix& other) const = default;

  private:
    int dim_;
    std::vector<Complex> entries_;
};

/// Hermitian observable in spectral form: real eigenvalues A_m with an
/// orthonormal eigenbasis. The eigenvalue/eigenvector order is preserved as
/// given (spectral_decompose emits ascending order).
class SpectralObservable {
  public:
    SpectralObservable(std::vector<double> eigenvalues,
                       std::vector<StateVector> eigenvectors);

    /// All eigenvalues 1 on the computational basis.
    static SpectralObservable identity(int dim);

    /// Diagonal observable on the computational basis (order as given).
    static SpectralObservable diagonal(std::vector<double> eigenvalues);

    int dim() const { return static_cast<int>(eigenvalues_.size()); }
    const std::vector<double>& eigenvalues() const { return eigenvalues_; }
    const std::vector<StateVector>& eigenvectors() const {
        return eigenvectors_;
    }

    /// Σ_m A_m |e_m⟩⟨e_m|.
    HermitianMatrix to_matrix() const;

  private:
    struct Unchecked {};
    SpectralObservable(Unchecked, std::vector<double> eigenvalues,
                       std::vector<StateVector> eigenvectors);

    std::vector<double> eigenvalues_;
    std::vector<StateVector> eigenvectors_;
};

/// Full eigendecomposition by cyclic Jacobi rotations. Eigenvalues come out
/// ascending. Throws ConvergenceFailure if the off-diagonal norm is not
/// below 1e-12·‖H‖ after 100 sweeps.
SpectralObservable spectral_decompose(const HermitianMatrix& h);

/// Û(φ)|s⟩ with Û(φ) = exp(−iφÂ): applies e^{−iφA_m} per eigencomponent.
StateVector evolve(const SpectralObservable& g, double phi,
                   const StateVector& s);

/// Deterministic Haar-like state: independent complex standard normals from
/// a counter-based generator keyed on (seed, slot), then normalized.
StateVector random_state(int dim, std::uint64_t seed);

/// Principal argument in (−π, π]; the −π branch edge maps to +π.
double principal_arg(Complex z);

} // namespace hilbert
} // namespace weakval

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

// Test-only oracles and generators. Everything here is deliberately
// independent of the library code paths it is used to check: dense
// matrix-vector products instead of spectral sums, a Taylor-series matrix
// exponential instead of eigenphase evolution, and a separate RNG.

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "weakval/hilbert.hpp"

namespace testsupport {

using weakval::Complex;
using weakval::hilbert::HermitianMatrix;
using weakval::hilbert::StateVector;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64{seed}; }

inline Complex random_complex(std::mt19937_64& gen) {
    std::normal_distribution<double> normal(0.0, 1.0);
    return Complex{normal(gen), normal(gen)};
}

inline StateVector random_test_state(int dim, std::mt19937_64& gen) {
    std::vector<Complex> raw(static_cast<std::size_t>(dim));
    for (Complex& z : raw) {
        z = random_complex(gen);
    }
    return StateVector::normalize(std::move(raw));
}

inline HermitianMatrix random_hermitian(int dim, std::mt19937_64& gen) {
    std::vector<Complex> entries(static_cast<std::size_t>(dim) * dim);
    for (Complex& z : entries) {
        z = random_complex(gen);
    }
    // The constructor symmetrizes to (M + M†)/2.
    return HermitianMatrix(dim, std::move(entries));
}

/// Random Hermitian generator rescaled to unit spectral radius, the natural
/// scale for observables driving unitary families.
inline weakval::hilbert::SpectralObservable random_unit_observable(
    int dim, std::mt19937_64& gen) {
    const auto raw =
        weakval::hilbert::spectral_decompose(random_hermitian(dim, gen));
    double radius = 0.0;
    for (double ev : raw.eigenvalues()) {
        radius = std::max(radius, std::abs(ev));
    }
    std::vector<double> scaled = raw.eigenvalues();
    if (radius > 0.0) {
        for (double& ev : scaled) {
            ev /= radius;
        }
    }
    return weakval::hilbert::SpectralObservable(std::move(scaled),
                                                raw.eigenvectors());
}

/// Dense y = M·x, the reference route for every ⟨f|Â|i⟩ check.
inline std::vector<Complex> matvec(const HermitianMatrix& m,
                                   const StateVector& x) {
    const int n = m.dim();
    std::vector<Complex> y(static_cast<std::size_t>(n), Complex{0.0, 0.0});
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            y[static_cast<std::size_t>(r)] += m.at(r, c) * x[c];
        }
    }
    return y;
}

inline Complex bra_op_ket(const StateVector& f, const HermitianMatrix& m,
                          const StateVector& i) {
    const std::vector<Complex> mi = matvec(m, i);
    Complex acc{0.0, 0.0};
    for (int k = 0; k < f.dim(); ++k) {
        acc += std::conj(f[k]) * mi[static_cast<std::size_t>(k)];
    }
    return acc;
}

/// exp(−iφH)|s⟩ by scaled-and-squared Taylor series on the dense matrix.
inline StateVector taylor_evolve(const HermitianMatrix& h, double phi,
                                 const StateVector& s) {
    const int n = h.dim();
    int scaling = 0;
    while (std::abs(phi) * h.frobenius_norm() > 0.25 * std::pow(2.0, scaling)
           && scaling < 60) {
        ++scaling;
    }
    const double scale = phi / std::pow(2.0, scaling);

    // One scaled step as a dense matrix: exp(−i·scale·H) by Taylor.
    std::vector<Complex> step(static_cast<std::size_t>(n) * n,
                              Complex{0.0, 0.0});
    std::vector<Complex> term(step);
    for (int k = 0; k < n; ++k) {
        step[static_cast<std::size_t>(k) * n + k] = Complex{1.0, 0.0};
        term[static_cast<std::size_t>(k) * n + k] = Complex{1.0, 0.0};
    }
    for (int order = 1; order <= 12; ++order) {
        std::vector<Complex> next(static_cast<std::size_t>(n) * n,
                                  Complex{0.0, 0.0});
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                Complex acc{0.0, 0.0};
                for (int k = 0; k < n; ++k) {
                    acc += term[static_cast<std::size_t>(r) * n + k] *
                           h.at(k, c);
                }
                next[static_cast<std::size_t>(r) * n + c] =
                    acc * Complex{0.0, -scale} / static_cast<double>(order);
            }
        }
        term = next;
        for (std::size_t k = 0; k < step.size(); ++k) {
            step[k] += term[k];
        }
    }
    // Square the step matrix `scaling` times.
    for (int round = 0; round < scaling; ++round) {
        std::vector<Complex> squared(static_cast<std::size_t>(n) * n,
                                     Complex{0.0, 0.0});
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                Complex acc{0.0, 0.0};
                for (int k = 0; k < n; ++k) {
                    acc += step[static_cast<std::size_t>(r) * n + k] *
                           step[static_cast<std::size_t>(k) * n + c];
                }
                squared[static_cast<std::size_t>(r) * n + c] = acc;
            }
        }
        step = squared;
    }

    std::vector<Complex> out(static_cast<std::size_t>(n), Complex{0.0, 0.0});
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            out[static_cast<std::size_t>(r)] +=
                step[static_cast<std::size_t>(r) * n + c] * s[c];
        }
    }
    return StateVector::normalize(std::move(out));
}

/// Closed-form eigenpairs of a 2x2 Hermitian matrix, ascending.
struct TwoByTwoEigen {
    double lambda_minus;
    double lambda_plus;
    std::vector<Complex> vec_minus;
    std::vector<Complex> vec_plus;
};

inline TwoByTwoEigen eigen2x2(const HermitianMatrix& m) {
    const double a = m.at(0, 0).real();
    const double d = m.at(1, 1).real();
    const Complex b = m.at(0, 1);
    const double mid = 0.5 * (a + d);
    const double radius =
        std::sqrt(0.25 * (a - d) * (a - d) + std::norm(b));
    TwoByTwoEigen out;
    out.lambda_minus = mid - radius;
    out.lambda_plus = mid + radius;
    auto eigvec = [&](double lambda) {
        std::vector<Complex> v;
        if (std::abs(b) > 1e-300) {
            v = {b, Complex{lambda - a, 0.0}};
        } else if (a <= d) {
            v = (lambda == out.lambda_minus)
                    ? std::vector<Complex>{Complex{1.0, 0.0}, {}}
                    : std::vector<Complex>{{}, Complex{1.0, 0.0}};
        } else {
            v = (lambda == out.lambda_minus)
                    ? std::vector<Complex>{{}, Complex{1.0, 0.0}}
                    : std::vector<Complex>{Complex{1.0, 0.0}, {}};
        }
        double norm = std::sqrt(std::norm(v[0]) + std::norm(v[1]));
        v[0] /= norm;
        v[1] /= norm;
        return v;
    };
    out.vec_minus = eigvec(out.lambda_minus);
    out.vec_plus = eigvec(out.lambda_plus);
    return out;
}

inline HermitianMatrix pauli_x() {
    return HermitianMatrix(2, {Complex{0, 0}, Complex{1, 0}, Complex{1, 0},
                               Complex{0, 0}});
}

inline HermitianMatrix pauli_z() {
    return HermitianMatrix(2, {Complex{1, 0}, Complex{0, 0}, Complex{0, 0},
                               Complex{-1, 0}});
}

/// Pauli-z as a SpectralObservable with eigenvalue +1 on |0⟩ and −1 on |1⟩,
/// matching the index convention of the worked qubit example.
inline weakval::hilbert::SpectralObservable pauli_z_observable() {
    return weakval::hilbert::SpectralObservable(
        {1.0, -1.0},
        {StateVector::basis_state(2, 0), StateVector::basis_state(2, 1)});
}

/// i = (|0⟩+|1⟩)/√2, f = (|0⟩+i|1⟩)/√2: the worked qubit pair.
inline StateVector qubit_initial() {
    return StateVector::normalize({Complex{1, 0}, Complex{1, 0}});
}

inline StateVector qubit_final() {
    return StateVector::normalize({Complex{1, 0}, Complex{0, 1}});
}

inline bool close(double a, double b, double tol) {
    return std::abs(a - b) <= tol;
}

inline bool close(Complex a, Complex b, double tol) {
    return std::abs(a - b) <= tol;
}

} // namespace testsupport

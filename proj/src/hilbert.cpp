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

#include "weakval/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace weakval::hilbert {

namespace {

constexpr double kUnitNormTol = 1e-9;
constexpr double kZeroNormFloor = 1e-300;
constexpr double kJacobiRelTol = 1e-12;
constexpr int kJacobiMaxSweeps = 100;

double l2_norm(const std::vector<Complex>& v) {
    double sum = 0.0;
    for (const Complex& z : v) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

// splitmix64 finalizer; with a per-slot counter this is a pure function of
// (seed, slot), so draws are order-independent and reproducible.
std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

// Uniform draw in (0, 1], safe as a logarithm argument.
double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
    constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
    const std::uint64_t bits = mix64(seed + (counter + 1) * kGolden);
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

} // namespace

StateVector::StateVector(std::vector<Complex> amplitudes)
    : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.empty()) {
        throw std::invalid_argument("StateVector needs dim >= 1");
    }
    const double norm = l2_norm(amplitudes_);
    // Negated comparison so non-finite norms fail too.
    if (!(std::abs(norm - 1.0) <= kUnitNormTol)) {
        throw std::invalid_argument(
            "StateVector amplitudes are not unit-norm (|v| = " +
            std::to_string(norm) + "); use StateVector::normalize");
    }
}

StateVector StateVector::normalize(std::vector<Complex> raw) {
    if (raw.empty()) {
        throw std::invalid_argument("cannot normalize an empty sequence");
    }
    const double norm = l2_norm(raw);
    if (!std::isfinite(norm)) {
        throw std::invalid_argument("cannot normalize non-finite amplitudes");
    }
    if (norm < kZeroNormFloor) {
        throw ZeroVector("cannot normalize a (near-)zero vector");
    }
    for (Complex& z : raw) {
        z /= norm;
    }
    return StateVector(std::move(raw));
}

StateVector StateVector::basis_state(int dim, int index) {
    if (dim < 1 || index < 0 || index >= dim) {
        throw std::invalid_argument("basis_state: index out of range");
    }
    std::vector<Complex> amps(static_cast<std::size_t>(dim), Complex{0.0, 0.0});
    amps[static_cast<std::size_t>(index)] = Complex{1.0, 0.0};
    return StateVector(std::move(amps));
}

Complex inner(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        throw DimensionMismatch("inner: dims " + std::to_string(a.dim()) +
                                " vs " + std::to_string(b.dim()));
    }
    Complex acc{0.0, 0.0};
    for (int k = 0; k < a.dim(); ++k) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

bool is_orthonormal(std::span<const StateVector> states, double tol) {
    for (std::size_t j = 0; j < states.size(); ++j) {
        for (std::size_t k = j; k < states.size(); ++k) {
            const Complex overlap = inner(states[j], states[k]);
            const double expected = (j == k) ? 1.0 : 0.0;
            if (std::abs(overlap - expected) >= tol) {
                return false;
            }
        }
    }
    return true;
}

HermitianMatrix::HermitianMatrix(int dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (dim < 1) {
        throw std::invalid_argument("HermitianMatrix needs dim >= 1");
    }
    if (entries_.size() != static_cast<std::size_t>(dim) * dim) {
        throw DimensionMismatch("HermitianMatrix: expected " +
                                std::to_string(dim * dim) + " entries, got " +
                                std::to_string(entries_.size()));
    }
    // Symmetrize to (H + H†)/2 so Hermiticity holds exactly.
    for (int r = 0; r < dim_; ++r) {
        std::size_t rr = static_cast<std::size_t>(r) * dim_ + r;
        entries_[rr] = Complex{entries_[rr].real(), 0.0};
        for (int c = r + 1; c < dim_; ++c) {
            std::size_t rc = static_cast<std::size_t>(r) * dim_ + c;
            std::size_t cr = static_cast<std::size_t>(c) * dim_ + r;
            const Complex avg = 0.5 * (entries_[rc] + std::conj(entries_[cr]));
            entries_[rc] = avg;
            entries_[cr] = std::conj(avg);
        }
    }
}

HermitianMatrix HermitianMatrix::identity(int dim) {
    std::vector<double> ones(static_cast<std::size_t>(dim), 1.0);
    return from_diagonal(ones);
}

HermitianMatrix HermitianMatrix::from_diagonal(
    const std::vector<double>& diagonal) {
    const int dim = static_cast<int>(diagonal.size());
    std::vector<Complex> entries(static_cast<std::size_t>(dim) * dim,
                                 Complex{0.0, 0.0});
    for (int k = 0; k < dim; ++k) {
        entries[static_cast<std::size_t>(k) * dim + k] =
            Complex{diagonal[static_cast<std::size_t>(k)], 0.0};
    }
    return HermitianMatrix(dim, std::move(entries));
}

double HermitianMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const Complex& z : entries_) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

SpectralObservable::SpectralObservable(std::vector<double> eigenvalues,
                                       std::vector<StateVector> eigenvectors)
    : eigenvalues_(std::move(eigenvalues)),
      eigenvectors_(std::move(eigenvectors)) {
    if (eigenvalues_.empty() || eigenvalues_.size() != eigenvectors_.size()) {
        throw DimensionMismatch(
            "SpectralObservable: eigenvalue/eigenvector count mismatch");
    }
    const int dim = eigenvectors_.front().dim();
    for (const StateVector& e : eigenvectors_) {
        if (e.dim() != dim) {
            throw DimensionMismatch(
                "SpectralObservable: mixed eigenvector dimensions");
        }
    }
    if (static_cast<int>(eigenvectors_.size()) != dim) {
        throw IncompleteBasis("SpectralObservable: basis has " +
                              std::to_string(eigenvectors_.size()) +
                              " vectors in dimension " + std::to_string(dim));
    }
    if (!is_orthonormal(eigenvectors_)) {
        throw std::invalid_argument(
            "SpectralObservable: eigenvectors are not orthonormal");
    }
}

SpectralObservable::SpectralObservable(Unchecked,
                                       std::vector<double> eigenvalues,
                                       std::vector<StateVector> eigenvectors)
    : eigenvalues_(std::move(eigenvalues)),
      eigenvectors_(std::move(eigenvectors)) {}

SpectralObservable SpectralObservable::identity(int dim) {
    return diagonal(std::vector<double>(static_cast<std::size_t>(dim), 1.0));
}

SpectralObservable SpectralObservable::diagonal(
    std::vector<double> eigenvalues) {
    const int dim = static_cast<int>(eigenvalues.size());
    if (dim < 1) {
        throw std::invalid_argument("diagonal observable needs dim >= 1");
    }
    std::vector<StateVector> basis;
    basis.reserve(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) {
        basis.push_back(StateVector::basis_state(dim, k));
    }
    return SpectralObservable(Unchecked{}, std::move(eigenvalues),
                              std::move(basis));
}

HermitianMatrix SpectralObservable::to_matrix() const {
    const int n = dim();
    std::vector<Complex> entries(static_cast<std::size_t>(n) * n,
                                 Complex{0.0, 0.0});
    for (int m = 0; m < n; ++m) {
        const StateVector& e = eigenvectors_[static_cast<std::size_t>(m)];
        const double a = eigenvalues_[static_cast<std::size_t>(m)];
        for (int r = 0; r < n; ++r) {
            for (int c = 0; c < n; ++c) {
                entries[static_cast<std::size_t>(r) * n + c] +=
                    a * e[r] * std::conj(e[c]);
            }
        }
    }
    return HermitianMatrix(n, std::move(entries));
}

SpectralObservable spectral_decompose(const HermitianMatrix& h) {
    const int n = h.dim();
    if (n > kMaxSpectralDim) {
        throw std::invalid_argument("spectral_decompose supports dim <= " +
                                    std::to_string(kMaxSpectralDim));
    }

    std::vector<Complex> a = h.entries();
    std::vector<Complex> v(static_cast<std::size_t>(n) * n, Complex{0.0, 0.0});
    for (int k = 0; k < n; ++k) {
        v[static_cast<std::size_t>(k) * n + k] = Complex{1.0, 0.0};
    }

    auto A = [&](int r, int c) -> Complex& {
        return a[static_cast<std::size_t>(r) * n + c];
    };
    auto V = [&](int r, int c) -> Complex& {
        return v[static_cast<std::size_t>(r) * n + c];
    };

    const double norm_h = h.frobenius_norm();
    auto off_norm = [&]() {
        double sum = 0.0;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                sum += 2.0 * std::norm(A(p, q));
            }
        }
        return std::sqrt(sum);
    };

    bool converged = (n == 1) || (norm_h == 0.0);
    for (int sweep = 0; sweep < kJacobiMaxSweeps && !converged; ++sweep) {
        if (off_norm() < kJacobiRelTol * norm_h) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = A(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) {
                    continue;
                }
                const double app = A(p, p).real();
                const double aqq = A(q, q).real();
                const Complex w = apq / r; // e^{i·arg(apq)}

                // Stable smaller-root tangent of the annihilating angle.
                const double tau = (app - aqq) / (2.0 * r);
                double t;
                if (std::abs(tau) > 1e150) {
                    t = 1.0 / (2.0 * tau);
                } else if (tau >= 0.0) {
                    t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
                } else {
                    t = 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                }
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) {
                        continue;
                    }
                    const Complex akp = A(k, p);
                    const Complex akq = A(k, q);
                    A(k, p) = c * akp + s * std::conj(w) * akq;
                    A(k, q) = -s * w * akp + c * akq;
                    A(p, k) = std::conj(A(k, p));
                    A(q, k) = std::conj(A(k, q));
                }
                A(p, p) = Complex{c * c * app + 2.0 * r * s * c + s * s * aqq,
                                  0.0};
                A(q, q) = Complex{s * s * app - 2.0 * r * s * c + c * c * aqq,
                                  0.0};
                A(p, q) = Complex{0.0, 0.0};
                A(q, p) = Complex{0.0, 0.0};

                for (int k = 0; k < n; ++k) {
                    const Complex vkp = V(k, p);
                    const Complex vkq = V(k, q);
                    V(k, p) = c * vkp + s * std::conj(w) * vkq;
                    V(k, q) = -s * w * vkp + c * vkq;
                }
            }
        }
    }
    if (!converged && off_norm() >= kJacobiRelTol * norm_h) {
        throw ConvergenceFailure(
            "spectral_decompose: Jacobi sweeps did not converge");
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int lhs, int rhs) {
        return A(lhs, lhs).real() < A(rhs, rhs).real();
    });

    std::vector<double> eigenvalues;
    std::vector<StateVector> eigenvectors;
    eigenvalues.reserve(static_cast<std::size_t>(n));
    eigenvectors.reserve(static_cast<std::size_t>(n));
    for (int m : order) {
        eigenvalues.push_back(A(m, m).real());
        std::vector<Complex> column(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) {
            column[static_cast<std::size_t>(k)] = V(k, m);
        }
        eigenvectors.push_back(StateVector(std::move(column)));
    }
    return SpectralObservable(std::move(eigenvalues), std::move(eigenvectors));
}

StateVector evolve(const SpectralObservable& g, double phi,
                   const StateVector& s) {
    if (g.dim() != s.dim()) {
        throw DimensionMismatch("evolve: generator dim " +
                                std::to_string(g.dim()) + " vs state dim " +
                                std::to_string(s.dim()));
    }
    const int n = s.dim();
    std::vector<Complex> out(static_cast<std::size_t>(n), Complex{0.0, 0.0});
    for (int m = 0; m < n; ++m) {
        const StateVector& e = g.eigenvectors()[static_cast<std::size_t>(m)];
        const Complex coeff =
            std::polar(1.0,
                       -phi * g.eigenvalues()[static_cast<std::size_t>(m)]) *
            inner(e, s);
        for (int k = 0; k < n; ++k) {
            out[static_cast<std::size_t>(k)] += coeff * e[k];
        }
    }
    return StateVector(std::move(out));
}

StateVector random_state(int dim, std::uint64_t seed) {
    if (dim < 1) {
        throw std::invalid_argument("random_state needs dim >= 1");
    }
    std::vector<Complex> raw(static_cast<std::size_t>(dim));
    for (int k = 0; k < dim; ++k) {
        const std::uint64_t slot = 2 * static_cast<std::uint64_t>(k);
        const double u1 = counter_uniform(seed, slot);
        const double u2 = counter_uniform(seed, slot + 1);
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        raw[static_cast<std::size_t>(k)] =
            Complex{radius * std::cos(angle), radius * std::sin(angle)};
    }
    return StateVector::normalize(std::move(raw));
}

double principal_arg(Complex z) {
    const double a = std::arg(z);
    return (a <= -std::numbers::pi) ? std::numbers::pi : a;
}

} // namespace weakval::hilbert

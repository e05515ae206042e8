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

#include "weakval/weakstats.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace weakval::weakstats {

using hilbert::inner;
using hilbert::principal_arg;

namespace {

constexpr double kTensionFloor = 1e-30;

double wrap_phase(double theta) {
    double w = std::remainder(theta, 2.0 * std::numbers::pi);
    if (w <= -std::numbers::pi) {
        w = std::numbers::pi;
    }
    return w;
}

Complex postselection_overlap(const StateVector& i, const StateVector& f,
                              double epsilon) {
    const Complex overlap = inner(f, i);
    if (std::abs(overlap) < epsilon) {
        throw OrthogonalPostselection(
            "post-selection overlap |<f|i>| = " +
            std::to_string(std::abs(overlap)) + " is below epsilon");
    }
    return overlap;
}

void require_complete_orthonormal(std::span<const StateVector> basis,
                                  int dim) {
    if (static_cast<int>(basis.size()) != dim) {
        throw IncompleteBasis("basis has " + std::to_string(basis.size()) +
                              " states in dimension " + std::to_string(dim));
    }
    if (!hilbert::is_orthonormal(basis)) {
        throw std::invalid_argument("basis is not orthonormal");
    }
}

bool state_less(const StateVector& a, const StateVector& b) {
    if (a.dim() != b.dim()) {
        return a.dim() < b.dim();
    }
    for (int k = 0; k < a.dim(); ++k) {
        if (a[k].real() != b[k].real()) {
            return a[k].real() < b[k].real();
        }
        if (a[k].imag() != b[k].imag()) {
            return a[k].imag() < b[k].imag();
        }
    }
    return false;
}

// -tension inside the principal branch; the ±π edge stays at +π.
double negate_tension(double tension) {
    return (tension == std::numbers::pi) ? std::numbers::pi : -tension;
}

} // namespace

Complex QuasiProbDistribution::sum() const {
    Complex acc{0.0, 0.0};
    for (const Complex& v : values) {
        acc += v;
    }
    return acc;
}

DiagonalUnitary::DiagonalUnitary(std::vector<StateVector> basis,
                                 std::vector<double> phases)
    : dim_(0), basis_(std::move(basis)), phases_(std::move(phases)) {
    if (basis_.empty()) {
        throw std::invalid_argument(
            "DiagonalUnitary: empty basis; use DiagonalUnitary::computational");
    }
    if (basis_.size() != phases_.size()) {
        throw DimensionMismatch("DiagonalUnitary: " +
                                std::to_string(basis_.size()) + " states vs " +
                                std::to_string(phases_.size()) + " phases");
    }
    dim_ = basis_.front().dim();
    require_complete_orthonormal(basis_, dim_);
    for (double& theta : phases_) {
        theta = wrap_phase(theta);
    }
}

DiagonalUnitary DiagonalUnitary::computational(int dim,
                                               std::vector<double> phases) {
    if (dim < 1 || static_cast<int>(phases.size()) != dim) {
        throw DimensionMismatch(
            "DiagonalUnitary::computational: phase count must equal dim");
    }
    DiagonalUnitary u{};
    u.dim_ = dim;
    u.phases_ = std::move(phases);
    for (double& theta : u.phases_) {
        theta = wrap_phase(theta);
    }
    return u;
}

StateVector DiagonalUnitary::apply(const StateVector& s) const {
    if (s.dim() != dim_) {
        throw DimensionMismatch("DiagonalUnitary::apply: dim mismatch");
    }
    const int n = dim_;
    std::vector<Complex> out(static_cast<std::size_t>(n), Complex{0.0, 0.0});
    if (uses_computational_basis()) {
        for (int k = 0; k < n; ++k) {
            out[static_cast<std::size_t>(k)] =
                std::polar(1.0, -phases_[static_cast<std::size_t>(k)]) * s[k];
        }
    } else {
        for (int m = 0; m < n; ++m) {
            const StateVector& e = basis_[static_cast<std::size_t>(m)];
            const Complex coeff =
                std::polar(1.0, -phases_[static_cast<std::size_t>(m)]) *
                inner(e, s);
            for (int k = 0; k < n; ++k) {
                out[static_cast<std::size_t>(k)] += coeff * e[k];
            }
        }
    }
    return StateVector(std::move(out));
}

Complex weak_value(const SpectralObservable& a, const StateVector& i,
                   const StateVector& f, double epsilon) {
    if (a.dim() != i.dim() || a.dim() != f.dim()) {
        throw DimensionMismatch("weak_value: dimension mismatch");
    }
    const Complex overlap = postselection_overlap(i, f, epsilon);
    Complex numerator{0.0, 0.0};
    for (int m = 0; m < a.dim(); ++m) {
        const StateVector& e = a.eigenvectors()[static_cast<std::size_t>(m)];
        numerator += a.eigenvalues()[static_cast<std::size_t>(m)] *
                     inner(f, e) * inner(e, i);
    }
    return numerator / overlap;
}

QuasiProbDistribution weak_conditional_distribution(
    const SpectralObservable& basis, const StateVector& i,
    const StateVector& f, double epsilon) {
    return weak_conditional_distribution(
        std::span<const StateVector>(basis.eigenvectors()), i, f, epsilon);
}

QuasiProbDistribution weak_conditional_distribution(
    std::span<const StateVector> basis, const StateVector& i,
    const StateVector& f, double epsilon) {
    if (i.dim() != f.dim()) {
        throw DimensionMismatch("weak_conditional_distribution: |i> and |f>");
    }
    require_complete_orthonormal(basis, i.dim());
    const Complex overlap = postselection_overlap(i, f, epsilon);

    QuasiProbDistribution d;
    d.phi = 0.0;
    d.basis_labels.reserve(basis.size());
    d.values.reserve(basis.size());
    for (int m = 0; m < static_cast<int>(basis.size()); ++m) {
        const StateVector& e = basis[static_cast<std::size_t>(m)];
        d.basis_labels.push_back(m);
        d.values.push_back(inner(f, e) * inner(e, i) / overlap);
    }
    return d;
}

Complex reconstruct_weak_value(std::span<const double> eigenvalues,
                               const QuasiProbDistribution& d) {
    if (eigenvalues.size() != d.values.size()) {
        throw DimensionMismatch("reconstruct_weak_value: " +
                                std::to_string(eigenvalues.size()) +
                                " eigenvalues vs " +
                                std::to_string(d.values.size()) + " values");
    }
    Complex acc{0.0, 0.0};
    for (std::size_t m = 0; m < eigenvalues.size(); ++m) {
        acc += eigenvalues[m] * d.values[m];
    }
    return acc;
}

QuasiProbDistribution shifted_distribution(const SpectralObservable& basis,
                                           double phi, const StateVector& i,
                                           const StateVector& f,
                                           double epsilon) {
    if (basis.dim() != i.dim() || basis.dim() != f.dim()) {
        throw DimensionMismatch("shifted_distribution: dimension mismatch");
    }
    const int n = basis.dim();
    std::vector<Complex> numerators(static_cast<std::size_t>(n));
    Complex shifted_overlap{0.0, 0.0}; // = <f|U(phi)|i>
    for (int m = 0; m < n; ++m) {
        const StateVector& e =
            basis.eigenvectors()[static_cast<std::size_t>(m)];
        const Complex term =
            inner(f, e) * inner(e, i) *
            std::polar(1.0,
                       -phi *
                           basis.eigenvalues()[static_cast<std::size_t>(m)]);
        numerators[static_cast<std::size_t>(m)] = term;
        shifted_overlap += term;
    }
    if (std::abs(shifted_overlap) < epsilon) {
        throw OrthogonalPostselection(
            "shifted_distribution: |<f|U(phi)|i>| vanishes at phi = " +
            std::to_string(phi) + " (zero of the response curve)");
    }

    QuasiProbDistribution d;
    d.phi = phi;
    d.basis_labels.resize(static_cast<std::size_t>(n));
    d.values.resize(static_cast<std::size_t>(n));
    for (int m = 0; m < n; ++m) {
        d.basis_labels[static_cast<std::size_t>(m)] = m;
        d.values[static_cast<std::size_t>(m)] =
            numerators[static_cast<std::size_t>(m)] / shifted_overlap;
    }
    return d;
}

double reconstruct_output_probability(const QuasiProbDistribution& d0,
                                      std::span<const double> eigenvalues,
                                      double phi, double p_f0) {
    if (d0.phi != 0.0) {
        throw std::invalid_argument(
            "reconstruct_output_probability needs the phi = 0 distribution");
    }
    if (eigenvalues.size() != d0.values.size()) {
        throw DimensionMismatch(
            "reconstruct_output_probability: eigenvalue count mismatch");
    }
    if (!(p_f0 > 0.0) || p_f0 > 1.0 + 1e-9) {
        throw std::invalid_argument(
            "reconstruct_output_probability: p_f0 must lie in (0, 1]");
    }
    Complex acc{0.0, 0.0};
    for (std::size_t m = 0; m < eigenvalues.size(); ++m) {
        acc += std::polar(1.0, -phi * eigenvalues[m]) * d0.values[m];
    }
    return std::norm(acc) * p_f0;
}

TensionTriad logical_tension(const StateVector& i, const StateVector& m,
                             const StateVector& f) {
    const StateVector* states[3] = {&i, &m, &f};

    // Evaluate the overlap product for one canonical permutation of the
    // triple so that every cyclic rotation computes bit-identical results
    // and every transposition lands on an exact negation. Rotations are
    // even permutations; transpositions are odd and conjugate the product.
    static constexpr std::array<std::array<int, 3>, 6> kPerms{{
        {0, 1, 2}, // even
        {1, 2, 0}, // even
        {2, 0, 1}, // even
        {0, 2, 1}, // odd
        {1, 0, 2}, // odd
        {2, 1, 0}, // odd
    }};
    int best = 0;
    for (int p = 1; p < 6; ++p) {
        const auto& cand = kPerms[static_cast<std::size_t>(p)];
        const auto& cur = kPerms[static_cast<std::size_t>(best)];
        for (int slot = 0; slot < 3; ++slot) {
            const StateVector& a =
                *states[static_cast<std::size_t>(cand[slot])];
            const StateVector& b = *states[static_cast<std::size_t>(cur[slot])];
            if (state_less(a, b)) {
                best = p;
                break;
            }
            if (state_less(b, a)) {
                break;
            }
        }
    }
    const auto& perm = kPerms[static_cast<std::size_t>(best)];
    const bool odd = best >= 3;

    const StateVector& ci = *states[static_cast<std::size_t>(perm[0])];
    const StateVector& cm = *states[static_cast<std::size_t>(perm[1])];
    const StateVector& cf = *states[static_cast<std::size_t>(perm[2])];
    const Complex product = inner(cf, cm) * inner(cm, ci) * inner(ci, cf);

    const double magnitude = std::abs(product);
    if (magnitude < kTensionFloor) {
        throw UndefinedTension(
            "logical_tension: overlap product vanishes, phase undefined");
    }
    double tension = principal_arg(product);
    if (odd) {
        tension = negate_tension(tension);
    }
    return TensionTriad{i, m, f, tension, magnitude};
}

MaxTransitionResult max_transition_unitary(std::span<const StateVector> basis,
                                           const StateVector& i,
                                           const StateVector& f,
                                           double epsilon) {
    if (i.dim() != f.dim()) {
        throw DimensionMismatch("max_transition_unitary: |i> and |f>");
    }
    require_complete_orthonormal(basis, i.dim());
    postselection_overlap(i, f, epsilon);

    std::vector<double> phases(basis.size());
    double weight_sum = 0.0;
    for (std::size_t m = 0; m < basis.size(); ++m) {
        const Complex term = inner(f, basis[m]) * inner(basis[m], i);
        const double weight = std::abs(term);
        // A vanishing term contributes nothing; phase 0 keeps it
        // deterministic.
        phases[m] = (weight == 0.0) ? 0.0 : principal_arg(term);
        weight_sum += weight;
    }
    const double achieved = weight_sum * weight_sum;
    return MaxTransitionResult{
        DiagonalUnitary(std::vector<StateVector>(basis.begin(), basis.end()),
                        std::move(phases)),
        achieved};
}

MaxTransitionResult max_transition_unitary(const SpectralObservable& basis,
                                           const StateVector& i,
                                           const StateVector& f,
                                           double epsilon) {
    return max_transition_unitary(
        std::span<const StateVector>(basis.eigenvectors()), i, f, epsilon);
}

MaxTransitionResult max_transition_unitary_computational(const StateVector& i,
                                                         const StateVector& f,
                                                         double epsilon) {
    if (i.dim() != f.dim()) {
        throw DimensionMismatch(
            "max_transition_unitary_computational: |i> and |f>");
    }
    postselection_overlap(i, f, epsilon);

    const int n = i.dim();
    std::vector<double> phases(static_cast<std::size_t>(n));
    double weight_sum = 0.0;
    for (int k = 0; k < n; ++k) {
        const Complex term = std::conj(f[k]) * i[k];
        const double weight = std::abs(term);
        phases[static_cast<std::size_t>(k)] =
            (weight == 0.0) ? 0.0 : principal_arg(term);
        weight_sum += weight;
    }
    const double achieved = weight_sum * weight_sum;
    return MaxTransitionResult{
        DiagonalUnitary::computational(n, std::move(phases)), achieved};
}

} // namespace weakval::weakstats

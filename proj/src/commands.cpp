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

#include "weakval/commands.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weakval/freeparticle.hpp"
#include "weakval/response.hpp"
#include "weakval/weakstats.hpp"

namespace weakval::cli {

namespace fp = weakval::freeparticle;
namespace ws = weakval::weakstats;

using hilbert::SpectralObservable;
using hilbert::StateVector;

namespace {

StateVector resolve_state(const Scenario& scenario, const std::string& name,
                          const std::string& role) {
    const auto it = scenario.states.find(name);
    if (it == scenario.states.end()) {
        throw ValidationError("undefined state \"" + name + "\" for --" +
                              role);
    }
    return StateVector::normalize(it->second);
}

SpectralObservable resolve_observable(const Scenario& scenario,
                                      const std::string& name) {
    const auto it = scenario.observables.find(name);
    if (it == scenario.observables.end()) {
        throw ValidationError("undefined observable \"" + name + "\"");
    }
    return hilbert::spectral_decompose(it->second);
}

// "standard" means the computational basis with eigenvalues 0..d-1; a name
// selects that observable's eigenbasis and spectrum.
SpectralObservable resolve_basis(const Scenario& scenario,
                                 const std::string& basis) {
    if (basis == "standard") {
        std::vector<double> labels(static_cast<std::size_t>(scenario.dim));
        for (int m = 0; m < scenario.dim; ++m) {
            labels[static_cast<std::size_t>(m)] = m;
        }
        return SpectralObservable::diagonal(std::move(labels));
    }
    return resolve_observable(scenario, basis);
}

fp::Normalization resolve_normalization(const std::string& mode) {
    if (mode == "numeric") {
        return fp::Normalization::numeric;
    }
    if (mode == "analytic") {
        return fp::Normalization::analytic;
    }
    throw ValidationError("--normalization must be numeric or analytic");
}

Table distribution_table(const ws::QuasiProbDistribution& d) {
    Table table;
    table.columns = {"m", "re", "im", "abs", "arg"};
    table.data.assign(5, {});
    for (std::size_t k = 0; k < d.values.size(); ++k) {
        table.data[0].push_back(d.basis_labels[k]);
        table.data[1].push_back(d.values[k].real());
        table.data[2].push_back(d.values[k].imag());
        table.data[3].push_back(std::abs(d.values[k]));
        table.data[4].push_back(hilbert::principal_arg(d.values[k]));
    }
    return table;
}

Table density_table(const fp::ConditionalDensity& d,
                    const fp::FreeParticleConfig& config) {
    const std::vector<double> action = fp::action_profile(d, config);
    Table table;
    table.columns = {"x", "re", "im", "abs", "arg", "arg_unwrapped", "action"};
    table.data.assign(7, {});
    for (std::size_t k = 0; k < d.values.size(); ++k) {
        table.data[0].push_back(d.xs[k]);
        table.data[1].push_back(d.values[k].real());
        table.data[2].push_back(d.values[k].imag());
        table.data[3].push_back(std::abs(d.values[k]));
        table.data[4].push_back(hilbert::principal_arg(d.values[k]));
        table.data[5].push_back(d.phase_unwrapped[k]);
        table.data[6].push_back(action[k]);
    }
    return table;
}

void add_config_scalars(Report& report, const fp::FreeParticleConfig& c) {
    report.scalars["mass"] = ScalarValue::real(c.mass);
    report.scalars["hbar"] = ScalarValue::real(c.hbar);
    report.scalars["tau"] = ScalarValue::real(c.tau);
    report.scalars["length"] = ScalarValue::real(c.length);
    report.scalars["points"] = ScalarValue::real(c.points);
}

Complex density_sum(const fp::ConditionalDensity& d) {
    Complex sum{0.0, 0.0};
    for (const Complex& v : d.values) {
        sum += v;
    }
    return sum * d.dx();
}

void run_weak_value(const CommandArgs& args, const Scenario& scenario,
                    Report& report) {
    const StateVector i = resolve_state(scenario, args.initial, "initial");
    const StateVector f = resolve_state(scenario, args.final_state, "final");
    const SpectralObservable a = resolve_observable(scenario, args.observable);
    const Complex overlap = hilbert::inner(f, i);
    const Complex value = ws::weak_value(a, i, f, scenario.epsilon);
    report.scalars["weak_value"] = ScalarValue::complex(value);
    report.scalars["postselection_overlap"] = ScalarValue::complex(overlap);
    report.scalars["postselection_probability"] =
        ScalarValue::real(std::norm(overlap));
}

void run_dist(const CommandArgs& args, const Scenario& scenario,
              Report& report) {
    const StateVector i = resolve_state(scenario, args.initial, "initial");
    const StateVector f = resolve_state(scenario, args.final_state, "final");
    const SpectralObservable basis = resolve_basis(scenario, args.basis);
    const ws::QuasiProbDistribution d =
        ws::weak_conditional_distribution(basis, i, f, scenario.epsilon);
    report.tables["distribution"] = distribution_table(d);
    report.scalars["distribution_sum"] = ScalarValue::complex(d.sum());
    if (args.basis != "standard") {
        report.scalars["weak_value_from_distribution"] = ScalarValue::complex(
            ws::reconstruct_weak_value(basis.eigenvalues(), d));
    }
}

void run_shift(const CommandArgs& args, const Scenario& scenario,
               Report& report) {
    const StateVector i = resolve_state(scenario, args.initial, "initial");
    const StateVector f = resolve_state(scenario, args.final_state, "final");
    const SpectralObservable basis = resolve_basis(scenario, args.basis);
    const ws::QuasiProbDistribution shifted =
        ws::shifted_distribution(basis, args.phi, i, f, scenario.epsilon);
    report.tables["distribution"] = distribution_table(shifted);
    report.scalars["phi"] = ScalarValue::real(args.phi);
    report.scalars["distribution_sum"] = ScalarValue::complex(shifted.sum());

    const double direct =
        response::transition_probability(i, f, basis, args.phi);
    report.scalars["output_probability"] = ScalarValue::real(direct);
    const ws::QuasiProbDistribution base =
        ws::weak_conditional_distribution(basis, i, f, scenario.epsilon);
    report.scalars["output_probability_reconstructed"] =
        ScalarValue::real(ws::reconstruct_output_probability(
            base, basis.eigenvalues(), args.phi,
            std::norm(hilbert::inner(f, i))));
}

void run_response(const CommandArgs& args, const Scenario& scenario,
                  Report& report) {
    const StateVector i = resolve_state(scenario, args.initial, "initial");
    const StateVector f = resolve_state(scenario, args.final_state, "final");
    const SpectralObservable g = resolve_observable(scenario, args.generator);
    const response::ResponseCurve curve = response::response_curve(
        i, f, g, args.phi_min, args.phi_max, args.steps);

    const ws::QuasiProbDistribution base =
        ws::weak_conditional_distribution(g, i, f, scenario.epsilon);
    const double p0 = std::norm(hilbert::inner(f, i));

    Table table;
    table.columns = {"phi", "probability", "probability_reconstructed"};
    table.data.assign(3, {});
    for (std::size_t j = 0; j < curve.phis.size(); ++j) {
        table.data[0].push_back(curve.phis[j]);
        table.data[1].push_back(curve.probabilities[j]);
        table.data[2].push_back(ws::reconstruct_output_probability(
            base, g.eigenvalues(), curve.phis[j], p0));
    }
    report.tables["response"] = std::move(table);

    report.scalars["im_weak_value"] = ScalarValue::real(
        ws::weak_value(g, i, f, scenario.epsilon).imag());
    report.scalars["im_weak_value_fd"] = ScalarValue::real(
        response::imaginary_weak_value_fd(i, f, g, args.fd_step,
                                          scenario.epsilon));
    report.scalars["fd_step"] = ScalarValue::real(args.fd_step);
}

void run_tension(const CommandArgs& args, const Scenario& scenario,
                 Report& report) {
    const StateVector i = resolve_state(scenario, args.tension_i, "i");
    const StateVector m = resolve_state(scenario, args.tension_m, "m");
    const StateVector f = resolve_state(scenario, args.tension_f, "f");
    const ws::TensionTriad triad = ws::logical_tension(i, m, f);
    report.scalars["tension"] = ScalarValue::real(triad.tension);
    report.scalars["overlap_magnitude"] =
        ScalarValue::real(triad.overlap_magnitude);
}

void run_umax(const CommandArgs& args, const Scenario& scenario,
              Report& report) {
    const StateVector i = resolve_state(scenario, args.initial, "initial");
    const StateVector f = resolve_state(scenario, args.final_state, "final");
    const SpectralObservable basis = resolve_basis(scenario, args.basis);
    const ws::MaxTransitionResult result =
        ws::max_transition_unitary(basis, i, f, scenario.epsilon);

    Table table;
    table.columns = {"m", "phase", "weight"};
    table.data.assign(3, {});
    for (int m = 0; m < basis.dim(); ++m) {
        const StateVector& e =
            basis.eigenvectors()[static_cast<std::size_t>(m)];
        table.data[0].push_back(m);
        table.data[1].push_back(
            result.unitary.phases()[static_cast<std::size_t>(m)]);
        table.data[2].push_back(
            std::abs(hilbert::inner(f, e) * hilbert::inner(e, i)));
    }
    report.tables["umax"] = std::move(table);

    report.scalars["achieved_probability"] =
        ScalarValue::real(result.achieved_probability);
    report.scalars["baseline_probability"] =
        ScalarValue::real(std::norm(hilbert::inner(f, i)));
    report.scalars["achieved_probability_check"] = ScalarValue::real(
        std::norm(hilbert::inner(f, result.unitary.apply(i))));
}

void run_free_particle(const CommandArgs& args, const Scenario& scenario,
                       Report& report) {
    const fp::FreeParticleConfig config = scenario.free_particle;
    const fp::FreeParticleScene scene = fp::build_scene(config);
    const fp::Normalization mode =
        resolve_normalization(args.normalization);
    const fp::ConditionalDensity density =
        fp::numeric_conditional_density(scene, mode, scenario.epsilon);

    report.tables["density"] = density_table(density, config);
    add_config_scalars(report, config);
    report.scalars["overlap"] = ScalarValue::complex(
        hilbert::inner(scene.f_state, scene.i_state));
    report.scalars["density_sum"] = ScalarValue::complex(density_sum(density));
    report.scalars["positivity_boundary"] =
        ScalarValue::real(fp::positivity_boundary(config));
    report.scalars["chirp_residual"] =
        ScalarValue::real(scene.chirp_residual);
    report.scalars["umax_achieved_probability"] = ScalarValue::real(
        ws::max_transition_unitary_computational(scene.i_state, scene.f_state,
                                                 scenario.epsilon)
            .achieved_probability);
}

void run_kick(const CommandArgs& args, const Scenario& scenario,
              Report& report) {
    const fp::FreeParticleConfig config = scenario.free_particle;
    const fp::FreeParticleScene scene = fp::build_scene(config);
    const fp::Normalization mode =
        resolve_normalization(args.normalization);
    const fp::ConditionalDensity kicked =
        fp::apply_kick(scene, args.delta_p, mode, scenario.epsilon);

    report.tables["density"] = density_table(kicked, config);
    add_config_scalars(report, config);
    report.scalars["delta_p"] = ScalarValue::real(args.delta_p);
    report.scalars["classical_center"] = ScalarValue::real(
        fp::classical_kick_center(args.delta_p, config));
    report.scalars["stationary_point"] =
        ScalarValue::real(fp::stationary_phase_point(kicked));
    report.scalars["density_sum"] = ScalarValue::complex(density_sum(kicked));
}

} // namespace

Scenario effective_scenario(const CommandArgs& args, Scenario scenario) {
    if (args.epsilon) {
        if (!(*args.epsilon > 0.0)) {
            throw ValidationError("--epsilon must be > 0");
        }
        scenario.epsilon = *args.epsilon;
    }
    if (args.seed) {
        scenario.seed = *args.seed;
    }
    auto& config = scenario.free_particle;
    if (args.mass) {
        config.mass = *args.mass;
    }
    if (args.hbar) {
        config.hbar = *args.hbar;
    }
    if (args.tau) {
        config.tau = *args.tau;
    }
    if (args.length) {
        config.length = *args.length;
    }
    if (args.points) {
        config.points = *args.points;
    }
    return scenario;
}

Report execute(const CommandArgs& args, const Scenario& scenario) {
    const Scenario effective = effective_scenario(args, scenario);
    Report report;
    report.command = args.command;
    report.inputs_digest = inputs_digest(effective);

    if (args.command == "weak-value") {
        run_weak_value(args, effective, report);
    } else if (args.command == "dist") {
        run_dist(args, effective, report);
    } else if (args.command == "shift") {
        run_shift(args, effective, report);
    } else if (args.command == "response") {
        run_response(args, effective, report);
    } else if (args.command == "tension") {
        run_tension(args, effective, report);
    } else if (args.command == "umax") {
        run_umax(args, effective, report);
    } else if (args.command == "free-particle") {
        run_free_particle(args, effective, report);
    } else if (args.command == "kick") {
        run_kick(args, effective, report);
    } else {
        throw std::invalid_argument("unknown command \"" + args.command +
                                    "\"");
    }
    return report;
}

} // namespace weakval::cli

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

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weakval/commands.hpp"
#include "weakval/errors.hpp"
#include "weakval/report.hpp"
#include "weakval/scenario.hpp"

namespace {

namespace wc = weakval::cli;

// Exit codes: 0 ok, 2 parse/validation, 3 orthogonal post-selection,
// 4 numeric failure, 5 bad flags.
constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitOrthogonal = 3;
constexpr int kExitNumeric = 4;
constexpr int kExitFlags = 5;

std::string read_file(const std::string& path) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) {
        throw weakval::ValidationError("cannot open scenario file \"" + path +
                                       "\"");
    }
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    return buffer.str();
}

void write_outputs(const wc::Report& report, wc::ReportFormat format,
                   const std::string& out_dir) {
    const auto files = wc::write_report(report, format);
    std::filesystem::create_directories(out_dir);
    for (const auto& [name, bytes] : files) {
        const std::filesystem::path path =
            std::filesystem::path(out_dir) / name;
        std::ofstream stream(path, std::ios::binary);
        stream << bytes;
        if (!stream) {
            throw weakval::ValidationError("cannot write \"" + path.string() +
                                           "\"");
        }
    }
    for (const auto& [name, scalar] : report.scalars) {
        if (scalar.complex_valued) {
            std::cout << name << " = " << wc::format_double(scalar.value.real())
                      << (scalar.value.imag() < 0 ? " - " : " + ")
                      << wc::format_double(std::abs(scalar.value.imag()))
                      << "i\n";
        } else {
            std::cout << name << " = "
                      << wc::format_double(scalar.value.real()) << "\n";
        }
    }
    for (const std::string& warning : report.warnings) {
        std::cerr << "warning: " << warning << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"weakval: weak-measurement statistics toolkit"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string out_format = "json";
    std::string out_dir = ".";
    wc::CommandArgs args;
    std::uint64_t seed_flag = 0;
    double epsilon_flag = 0.0;

    app.add_option("--scenario", scenario_path, "scenario JSON file");
    app.add_option("--out", out_format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out-path", out_dir, "directory for report files");
    auto* seed_opt = app.add_option("--seed", seed_flag, "deterministic seed");
    auto* eps_opt =
        app.add_option("--epsilon", epsilon_flag, "orthogonality threshold");

    auto* weak_value = app.add_subcommand("weak-value",
                                          "complex weak value of an "
                                          "observable between |i> and |f>");
    weak_value->add_option("--observable", args.observable)->required();
    weak_value->add_option("--initial", args.initial)->required();
    weak_value->add_option("--final", args.final_state)->required();

    auto* dist = app.add_subcommand("dist",
                                    "weak conditional quasiprobabilities "
                                    "over a basis");
    dist->add_option("--basis", args.basis, "observable name or 'standard'");
    dist->add_option("--initial", args.initial)->required();
    dist->add_option("--final", args.final_state)->required();

    auto* shift = app.add_subcommand("shift",
                                     "quasiprobabilities after the generated "
                                     "unitary at phi");
    shift->add_option("--phi", args.phi)->required();
    shift->add_option("--basis", args.basis);
    shift->add_option("--initial", args.initial)->required();
    shift->add_option("--final", args.final_state)->required();

    auto* response = app.add_subcommand("response",
                                        "transition-probability curve and "
                                        "the half-log-slope at phi = 0");
    response->add_option("--generator", args.generator)->required();
    response->add_option("--initial", args.initial)->required();
    response->add_option("--final", args.final_state)->required();
    response->add_option("--phi-min", args.phi_min);
    response->add_option("--phi-max", args.phi_max);
    response->add_option("--steps", args.steps);
    response->add_option("--fd-step", args.fd_step);

    auto* tension = app.add_subcommand("tension",
                                       "phase of the three-state overlap "
                                       "product");
    tension->add_option("--i", args.tension_i)->required();
    tension->add_option("--m", args.tension_m)->required();
    tension->add_option("--f", args.tension_f)->required();

    auto* umax = app.add_subcommand("umax",
                                    "diagonal unitary maximizing the i->f "
                                    "transition probability");
    umax->add_option("--basis", args.basis);
    umax->add_option("--initial", args.initial)->required();
    umax->add_option("--final", args.final_state)->required();

    auto* free_particle = app.add_subcommand("free-particle",
                                             "conditional position density "
                                             "of the pinned free particle");
    double kick_flag = 0.0;
    auto* kick_opt = free_particle->add_option(
        "--kick", kick_flag, "shorthand for the kick subcommand");
    auto* kick = app.add_subcommand("kick",
                                    "free-particle density after a momentum "
                                    "kick");
    kick->add_option("--delta-p", args.delta_p)->required();
    double mass_flag = 0.0;
    double hbar_flag = 0.0;
    double tau_flag = 0.0;
    double length_flag = 0.0;
    int points_flag = 0;
    std::vector<CLI::Option*> config_opts;
    for (CLI::App* sub : {free_particle, kick}) {
        config_opts.push_back(
            sub->add_option("--mass", mass_flag, "particle mass"));
        config_opts.push_back(
            sub->add_option("--hbar", hbar_flag, "reduced Planck constant"));
        config_opts.push_back(
            sub->add_option("--tau", tau_flag, "slit-to-slit transit time"));
        config_opts.push_back(
            sub->add_option("--length", length_flag, "spatial box length"));
        config_opts.push_back(
            sub->add_option("--points", points_flag, "grid size (even)"));
        sub->add_option("--normalization", args.normalization,
                        "numeric or analytic overlap")
            ->check(CLI::IsMember({"numeric", "analytic"}));
    }

    // Global flags are accepted on either side of the subcommand.
    for (CLI::App* sub :
         app.get_subcommands([](CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFlags;
    }

    args.command = app.get_subcommands().front()->get_name();
    if (kick_opt->count() > 0) {
        args.command = "kick";
        args.delta_p = kick_flag;
    }
    if (seed_opt->count() > 0) {
        args.seed = seed_flag;
    }
    if (eps_opt->count() > 0) {
        args.epsilon = epsilon_flag;
    }
    for (CLI::Option* opt : config_opts) {
        if (opt->count() == 0) {
            continue;
        }
        const std::string name = opt->get_name();
        if (name == "--mass") {
            args.mass = mass_flag;
        } else if (name == "--hbar") {
            args.hbar = hbar_flag;
        } else if (name == "--tau") {
            args.tau = tau_flag;
        } else if (name == "--length") {
            args.length = length_flag;
        } else if (name == "--points") {
            args.points = points_flag;
        }
    }

    try {
        wc::Scenario scenario;
        if (!scenario_path.empty()) {
            scenario = wc::parse_scenario(read_file(scenario_path));
        } else if (args.command != "free-particle" && args.command != "kick") {
            throw weakval::ValidationError("--scenario is required for " +
                                           args.command);
        }
        const wc::Report report = wc::execute(args, scenario);
        const wc::ReportFormat format = (out_format == "csv")
                                            ? wc::ReportFormat::csv
                                            : wc::ReportFormat::json;
        write_outputs(report, format, out_dir);
        return kExitOk;
    } catch (const weakval::OrthogonalPostselection& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOrthogonal;
    } catch (const weakval::ConvergenceFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const weakval::NumericalUnderflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const weakval::Error& e) {
        // Parse, validation, range, and grid problems are all input errors.
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitNumeric;
    }
}

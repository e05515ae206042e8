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

#include <cstdint>
#include <optional>
#include <string>

#include "weakval/report.hpp"
#include "weakval/scenario.hpp"

namespace weakval::cli {

/// Typed flag values for one command invocation. Optionals override the
/// scenario options when set.
struct CommandArgs {
    std::string command;

    // State/observable references.
    std::string observable;
    std::string initial;
    std::string final_state;
    std::string basis = "standard"; // "standard" or an observable name
    std::string generator;
    std::string tension_i;
    std::string tension_m;
    std::string tension_f;

    // Numeric parameters.
    double phi = 0.0;
    double phi_min = -3.14159265358979323846;
    double phi_max = 3.14159265358979323846;
    int steps = 101;
    double fd_step = 1e-3;
    double delta_p = 0.0;
    std::string normalization = "numeric";

    // Free-particle overrides.
    std::optional<double> mass;
    std::optional<double> hbar;
    std::optional<double> tau;
    std::optional<double> length;
    std::optional<int> points;

    // Global overrides.
    std::optional<double> epsilon;
    std::optional<std::uint64_t> seed;
};

/// Applies the flag overrides onto the scenario options and returns the
/// scenario that actually drives the run (also the digest input).
Scenario effective_scenario(const CommandArgs& args, Scenario scenario);

/// Runs one command against a scenario. Every numeric result comes from one
/// toolkit operation; module errors propagate unchanged.
Report execute(const CommandArgs& args, const Scenario& scenario);

} // namespace weakval::cli

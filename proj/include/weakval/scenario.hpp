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
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "weakval/freeparticle.hpp"
#include "weakval/hilbert.hpp"

namespace weakval::cli {

/// Parsed scenario document: named raw states and Hermitian observables over
/// one dimension, plus run options. Complex literals are [re, im] pairs.
struct Scenario {
    int dim = 0;
    std::map<std::string, std::vector<Complex>> states;
    std::map<std::string, hilbert::HermitianMatrix> observables;

    double epsilon = 1e-12;
    std::uint64_t seed = 0;
    freeparticle::FreeParticleConfig free_particle{};

    bool operator==(const Scenario& other) const = default;
};

/// Parses a UTF-8 JSON scenario. Shape problems (bad syntax, non-pair
/// complex literals, unknown keys) raise ParseError with line/column where
/// known; semantic problems (dimension mismatch, zero state) raise
/// ValidationError.
Scenario parse_scenario(std::string_view text);

/// Canonical serialization: sorted keys, 17-significant-digit floats.
/// serialize(parse(text)) parses back to an equal Scenario.
std::string serialize_scenario(const Scenario& s);

/// 64-bit FNV-1a over the canonical serialization, as 16 hex digits.
std::string inputs_digest(const Scenario& s);

/// %.17g rendering used by every emitter, so reports round-trip bitwise.
std::string format_double(double v);

/// JSON string literal with the mandatory escapes, including quotes.
std::string json_quote(std::string_view s);

} // namespace weakval::cli

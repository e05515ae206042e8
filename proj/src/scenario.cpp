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

#include "weakval/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include <json.hpp>

namespace weakval::cli {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t byte_offset) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t pos = 0; pos < byte_offset && pos < text.size(); ++pos) {
        if (text[pos] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

[[noreturn]] void shape_error(const std::string& what) {
    throw ParseError(what);
}

Complex parse_complex_pair(const json& node, const std::string& where) {
    if (!node.is_array() || node.size() != 2 || !node[0].is_number() ||
        !node[1].is_number()) {
        shape_error(where + ": complex literals are [re, im] pairs of "
                            "numbers");
    }
    const Complex value{node[0].get<double>(), node[1].get<double>()};
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag())) {
        shape_error(where + ": non-finite number");
    }
    return value;
}

std::vector<Complex> parse_state(const json& node, const std::string& name,
                                 int dim) {
    if (!node.is_array()) {
        shape_error("state \"" + name + "\" must be an array of [re, im] "
                                        "pairs");
    }
    std::vector<Complex> amplitudes;
    amplitudes.reserve(node.size());
    for (const json& entry : node) {
        amplitudes.push_back(
            parse_complex_pair(entry, "state \"" + name + "\""));
    }
    if (static_cast<int>(amplitudes.size()) != dim) {
        throw ValidationError("state \"" + name + "\" has " +
                              std::to_string(amplitudes.size()) +
                              " amplitudes, expected dim = " +
                              std::to_string(dim));
    }
    double norm_sq = 0.0;
    for (const Complex& z : amplitudes) {
        norm_sq += std::norm(z);
    }
    if (!(std::sqrt(norm_sq) >= 1e-300)) {
        throw ValidationError("state \"" + name + "\" is the zero vector");
    }
    return amplitudes;
}

hilbert::HermitianMatrix parse_observable(const json& node,
                                          const std::string& name, int dim) {
    if (!node.is_array()) {
        shape_error("observable \"" + name +
                    "\" must be an array of rows of [re, im] pairs");
    }
    if (static_cast<int>(node.size()) != dim) {
        throw ValidationError("observable \"" + name + "\" has " +
                              std::to_string(node.size()) +
                              " rows, expected dim = " + std::to_string(dim));
    }
    std::vector<Complex> entries;
    entries.reserve(static_cast<std::size_t>(dim) * dim);
    for (const json& row : node) {
        if (!row.is_array()) {
            shape_error("observable \"" + name +
                        "\": each row must be an array of [re, im] pairs");
        }
        if (static_cast<int>(row.size()) != dim) {
            throw ValidationError("observable \"" + name +
                                  "\" is not square: row of size " +
                                  std::to_string(row.size()) +
                                  ", expected " + std::to_string(dim));
        }
        for (const json& entry : row) {
            entries.push_back(
                parse_complex_pair(entry, "observable \"" + name + "\""));
        }
    }
    return hilbert::HermitianMatrix(dim, std::move(entries));
}

void parse_free_particle(const json& node,
                         freeparticle::FreeParticleConfig& config) {
    if (!node.is_object()) {
        shape_error("options.free_particle must be an object");
    }
    for (const auto& [key, value] : node.items()) {
        if (key == "mass" && value.is_number()) {
            config.mass = value.get<double>();
        } else if (key == "hbar" && value.is_number()) {
            config.hbar = value.get<double>();
        } else if (key == "tau" && value.is_number()) {
            config.tau = value.get<double>();
        } else if (key == "length" && value.is_number()) {
            config.length = value.get<double>();
        } else if (key == "points" && value.is_number_integer()) {
            config.points = value.get<int>();
        } else {
            shape_error("options.free_particle: unknown or mistyped key \"" +
                        key + "\"");
        }
    }
}

void parse_options(const json& node, Scenario& scenario) {
    if (!node.is_object()) {
        shape_error("options must be an object");
    }
    for (const auto& [key, value] : node.items()) {
        if (key == "epsilon") {
            if (!value.is_number()) {
                shape_error("options.epsilon must be a number");
            }
            scenario.epsilon = value.get<double>();
        } else if (key == "seed") {
            if (!value.is_number_unsigned()) {
                shape_error("options.seed must be a nonnegative integer");
            }
            scenario.seed = value.get<std::uint64_t>();
        } else if (key == "free_particle") {
            parse_free_particle(value, scenario.free_particle);
        } else {
            shape_error("options: unknown key \"" + key + "\"");
        }
    }
    if (!(scenario.epsilon > 0.0)) {
        throw ValidationError("options.epsilon must be > 0");
    }
}

void append_complex(std::string& out, const Complex& z) {
    out += '[';
    out += format_double(z.real());
    out += ',';
    out += format_double(z.imag());
    out += ']';
}

} // namespace

std::string format_double(double v) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", v);
    return buffer;
}

std::string json_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
        case '"':
            out += "\\\"";
            break;
        case '\\':
            out += "\\\\";
            break;
        case '\n':
            out += "\\n";
            break;
        case '\r':
            out += "\\r";
            break;
        case '\t':
            out += "\\t";
            break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buffer[8];
                std::snprintf(buffer, sizeof buffer, "\\u%04x",
                              static_cast<unsigned>(c));
                out += buffer;
            } else {
                out += c;
            }
        }
    }
    out += '"';
    return out;
}

Scenario parse_scenario(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, column] = line_column(text, e.byte);
        throw ParseError("scenario is not valid JSON at line " +
                             std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + e.what(),
                         line, column);
    }
    if (!doc.is_object()) {
        shape_error("scenario root must be a JSON object");
    }

    Scenario scenario;
    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
        shape_error("scenario needs an integer \"dim\"");
    }
    scenario.dim = doc["dim"].get<int>();
    if (scenario.dim < 1) {
        throw ValidationError("dim must be >= 1");
    }
    if (scenario.dim > hilbert::kMaxSpectralDim) {
        throw ValidationError("dim must be <= " +
                              std::to_string(hilbert::kMaxSpectralDim));
    }

    for (const auto& [key, value] : doc.items()) {
        if (key == "dim") {
            continue;
        }
        if (key == "states") {
            if (!value.is_object()) {
                shape_error("states must be an object of named amplitude "
                            "arrays");
            }
            for (const auto& [name, state] : value.items()) {
                scenario.states.emplace(
                    name, parse_state(state, name, scenario.dim));
            }
        } else if (key == "observables") {
            if (!value.is_object()) {
                shape_error("observables must be an object of named "
                            "matrices");
            }
            for (const auto& [name, matrix] : value.items()) {
                scenario.observables.emplace(
                    name, parse_observable(matrix, name, scenario.dim));
            }
        } else if (key == "options") {
            parse_options(value, scenario);
        } else {
            shape_error("scenario: unknown key \"" + key + "\"");
        }
    }
    return scenario;
}

std::string serialize_scenario(const Scenario& s) {
    // std::map iteration gives sorted keys, so the bytes are canonical.
    std::string out;
    out += "{\"dim\":" + std::to_string(s.dim);

    out += ",\"observables\":{";
    bool first = true;
    for (const auto& [name, matrix] : s.observables) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += json_quote(name) + ":[";
        for (int r = 0; r < matrix.dim(); ++r) {
            if (r != 0) {
                out += ',';
            }
            out += '[';
            for (int c = 0; c < matrix.dim(); ++c) {
                if (c != 0) {
                    out += ',';
                }
                append_complex(out, matrix.at(r, c));
            }
            out += ']';
        }
        out += ']';
    }
    out += '}';

    out += ",\"options\":{\"epsilon\":" + format_double(s.epsilon);
    const auto& fp = s.free_particle;
    out += ",\"free_particle\":{\"hbar\":" + format_double(fp.hbar);
    out += ",\"length\":" + format_double(fp.length);
    out += ",\"mass\":" + format_double(fp.mass);
    out += ",\"points\":" + std::to_string(fp.points);
    out += ",\"tau\":" + format_double(fp.tau);
    out += "},\"seed\":" + std::to_string(s.seed) + '}';

    out += ",\"states\":{";
    first = true;
    for (const auto& [name, amplitudes] : s.states) {
        if (!first) {
            out += ',';
        }
        first = false;
        out += json_quote(name) + ":[";
        for (std::size_t k = 0; k < amplitudes.size(); ++k) {
            if (k != 0) {
                out += ',';
            }
            append_complex(out, amplitudes[k]);
        }
        out += ']';
    }
    out += "}}";
    return out;
}

std::string inputs_digest(const Scenario& s) {
    const std::string bytes = serialize_scenario(s);
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 1099511628211ULL;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx",
                  static_cast<unsigned long long>(hash));
    return buffer;
}

} // namespace weakval::cli

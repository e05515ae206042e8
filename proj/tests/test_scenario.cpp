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

#include <cstdlib>
#include <numbers>
#include <string>

#include <doctest.h>

#include "weakval/scenario.hpp"

using namespace weakval;
using namespace weakval::cli;

namespace {

const char* kQubitScenario = R"({
  "dim": 2,
  "states": {
    "plus": [[1, 0], [1, 0]],
    "target": [[1, 0], [0, 1]]
  },
  "observables": {
    "sz": [[[1, 0], [0, 0]], [[0, 0], [-1, 0]]]
  },
  "options": {"epsilon": 1e-12, "seed": 7}
})";

} // namespace

TEST_CASE("parse_scenario accepts a minimal document") {
    const Scenario s = parse_scenario(R"({"dim": 2, "states": {"a": [[1, 0],
        [0, 0]]}})");
    CHECK(s.dim == 2);
    CHECK(s.states.size() == 1);
    CHECK(s.states.at("a")[0] == Complex{1.0, 0.0});
    CHECK(s.epsilon == 1e-12);
}

TEST_CASE("parse_scenario reads states, observables and options") {
    const Scenario s = parse_scenario(kQubitScenario);
    CHECK(s.dim == 2);
    CHECK(s.states.size() == 2);
    CHECK(s.observables.size() == 1);
    CHECK(s.observables.at("sz").at(1, 1) == Complex{-1.0, 0.0});
    CHECK(s.seed == 7);
}

TEST_CASE("parse_scenario error taxonomy") {
    SUBCASE("malformed syntax carries a position") {
        try {
            parse_scenario("{\n  \"dim\": 2,\n  oops\n}");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
            CHECK(e.column() > 0);
        }
    }

    SUBCASE("triple instead of a complex pair names the convention") {
        try {
            parse_scenario(R"({"dim": 2, "states": {"a": [[1, 0, 0],
                [0, 0]]}})");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(std::string(e.what()).find("[re, im]") !=
                  std::string::npos);
        }
    }

    SUBCASE("semantic problems are validation errors") {
        CHECK_THROWS_AS(
            parse_scenario(R"({"dim": 3, "states": {"a": [[1, 0]]}})"),
            ValidationError);
        CHECK_THROWS_AS(
            parse_scenario(R"({"dim": 1, "states": {"a": [[0, 0]]}})"),
            ValidationError);
        CHECK_THROWS_AS(
            parse_scenario(
                R"({"dim": 2, "observables": {"m": [[[1, 0]], [[0, 0]]]}})"),
            ValidationError);
        CHECK_THROWS_AS(parse_scenario(R"({"dim": 0})"), ValidationError);
    }

    SUBCASE("unknown keys are rejected") {
        CHECK_THROWS_AS(parse_scenario(R"({"dim": 2, "stats": {}})"),
                        ParseError);
        CHECK_THROWS_AS(
            parse_scenario(R"({"dim": 2, "options": {"sigma": 1}})"),
            ParseError);
    }
}

TEST_CASE("serialization round-trips to an equal scenario") {
    const Scenario parsed = parse_scenario(kQubitScenario);
    const std::string canonical = serialize_scenario(parsed);
    const Scenario reparsed = parse_scenario(canonical);
    CHECK(parsed == reparsed);
    // Canonical bytes are a fixed point of parse∘serialize.
    CHECK(serialize_scenario(reparsed) == canonical);
}

TEST_CASE("free-particle options survive the round-trip") {
    const Scenario parsed = parse_scenario(R"({
      "dim": 2,
      "states": {"a": [[1, 0], [0, 0]]},
      "options": {"free_particle": {"mass": 2.5, "length": 12.0,
                                    "points": 512}}
    })");
    CHECK(parsed.free_particle.mass == 2.5);
    CHECK(parsed.free_particle.points == 512);
    CHECK(parsed.free_particle.hbar == 1.0);
    const Scenario reparsed = parse_scenario(serialize_scenario(parsed));
    CHECK(parsed == reparsed);
}

TEST_CASE("inputs digest") {
    const Scenario a = parse_scenario(kQubitScenario);
    Scenario b = a;

    SUBCASE("16 hex characters, stable across calls") {
        const std::string digest = inputs_digest(a);
        CHECK(digest.size() == 16);
        CHECK(digest.find_first_not_of("0123456789abcdef") ==
              std::string::npos);
        CHECK(inputs_digest(a) == digest);
    }

    SUBCASE("sensitive to any input change") {
        b.epsilon = 1e-10;
        CHECK(inputs_digest(a) != inputs_digest(b));
    }
}

TEST_CASE("format_double survives a parse round-trip") {
    for (double v : {0.5, std::numbers::pi, 1.0 / 3.0, 1e-300, -0.0,
                     123456.789012345678, 2.2250738585072014e-308}) {
        const std::string text = format_double(v);
        const double back = std::strtod(text.c_str(), nullptr);
        CHECK(back == v);
    }
}

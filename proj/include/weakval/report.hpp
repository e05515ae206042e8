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

#include <map>
#include <string>
#include <vector>

#include "weakval/hilbert.hpp"

namespace weakval::cli {

/// Named columns of equal-length numeric data.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> data; // data[j] belongs to columns[j]

    std::size_t row_count() const {
        return data.empty() ? 0 : data.front().size();
    }
};

/// A scalar result; complex scalars serialize as [re, im], real ones as a
/// bare number.
struct ScalarValue {
    Complex value{0.0, 0.0};
    bool complex_valued = false;

    static ScalarValue real(double v) { return {Complex{v, 0.0}, false}; }
    static ScalarValue complex(Complex v) { return {v, true}; }
};

enum class ReportFormat { csv, json };

/// Machine-readable result of one command run. Key order is fixed (sorted
/// maps), floats print with 17 significant digits, so identical inputs give
/// byte-identical bytes.
struct Report {
    std::string command;
    std::string inputs_digest;
    std::map<std::string, Table> tables;
    std::map<std::string, ScalarValue> scalars;
    std::vector<std::string> warnings;
};

/// Renders the report as named files: one CSV per table plus scalars.csv
/// and meta.csv, or a single report.json. File names are prefixed with the
/// command (dashes become underscores).
std::map<std::string, std::string> write_report(const Report& r,
                                                ReportFormat format);

} // namespace weakval::cli

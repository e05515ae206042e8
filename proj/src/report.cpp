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

#include "weakval/report.hpp"

#include <algorithm>

#include "weakval/scenario.hpp"

namespace weakval::cli {

namespace {

std::string file_prefix(const std::string& command) {
    std::string prefix = command;
    std::replace(prefix.begin(), prefix.end(), '-', '_');
    return prefix;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string table_csv(const Table& table) {
    std::string out;
    for (std::size_t j = 0; j < table.columns.size(); ++j) {
        if (j != 0) {
            out += ',';
        }
        out += csv_quote(table.columns[j]);
    }
    out += '\n';
    for (std::size_t row = 0; row < table.row_count(); ++row) {
        for (std::size_t j = 0; j < table.data.size(); ++j) {
            if (j != 0) {
                out += ',';
            }
            out += format_double(table.data[j][row]);
        }
        out += '\n';
    }
    return out;
}

std::string scalars_csv(const Report& r) {
    std::string out = "name,re,im\n";
    for (const auto& [name, scalar] : r.scalars) {
        out += csv_quote(name) + ',' + format_double(scalar.value.real()) +
               ',' + format_double(scalar.value.imag()) + '\n';
    }
    return out;
}

std::string meta_csv(const Report& r) {
    std::string out = "key,value\n";
    out += "command," + csv_quote(r.command) + '\n';
    out += "inputs_digest," + csv_quote(r.inputs_digest) + '\n';
    for (std::size_t k = 0; k < r.warnings.size(); ++k) {
        out += "warning_" + std::to_string(k) + ',' +
               csv_quote(r.warnings[k]) + '\n';
    }
    return out;
}

std::string report_json(const Report& r) {
    std::string out = "{\n";
    out += "  \"command\": " + json_quote(r.command) + ",\n";
    out += "  \"inputs_digest\": " + json_quote(r.inputs_digest) + ",\n";

    out += "  \"scalars\": {";
    bool first = true;
    for (const auto& [name, scalar] : r.scalars) {
        out += first ? "\n" : ",\n";
        first = false;
        out += "    " + json_quote(name) + ": ";
        if (scalar.complex_valued) {
            out += '[' + format_double(scalar.value.real()) + ", " +
                   format_double(scalar.value.imag()) + ']';
        } else {
            out += format_double(scalar.value.real());
        }
    }
    out += first ? "},\n" : "\n  },\n";

    out += "  \"tables\": {";
    first = true;
    for (const auto& [name, table] : r.tables) {
        out += first ? "\n" : ",\n";
        first = false;
        out += "    " + json_quote(name) + ": {\n      \"columns\": [";
        for (std::size_t j = 0; j < table.columns.size(); ++j) {
            if (j != 0) {
                out += ", ";
            }
            out += json_quote(table.columns[j]);
        }
        out += "],\n      \"rows\": [";
        for (std::size_t row = 0; row < table.row_count(); ++row) {
            out += (row == 0) ? "\n" : ",\n";
            out += "        [";
            for (std::size_t j = 0; j < table.data.size(); ++j) {
                if (j != 0) {
                    out += ", ";
                }
                out += format_double(table.data[j][row]);
            }
            out += ']';
        }
        out += table.row_count() == 0 ? "]\n    }" : "\n      ]\n    }";
    }
    out += first ? "},\n" : "\n  },\n";

    out += "  \"warnings\": [";
    for (std::size_t k = 0; k < r.warnings.size(); ++k) {
        if (k != 0) {
            out += ", ";
        }
        out += json_quote(r.warnings[k]);
    }
    out += "]\n}\n";
    return out;
}

} // namespace

std::map<std::string, std::string> write_report(const Report& r,
                                                ReportFormat format) {
    const std::string prefix = file_prefix(r.command);
    std::map<std::string, std::string> files;
    if (format == ReportFormat::json) {
        files[prefix + "_report.json"] = report_json(r);
        return files;
    }
    for (const auto& [name, table] : r.tables) {
        files[prefix + '_' + name + ".csv"] = table_csv(table);
    }
    files[prefix + "_scalars.csv"] = scalars_csv(r);
    files[prefix + "_meta.csv"] = meta_csv(r);
    return files;
}

} // namespace weakval::cli

// Copyright 2026 The picodes Authors
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

#include "picodes/report.h"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace picodes {

std::string fmt_num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void RunReport::check(std::string name, bool passed, std::string detail) {
    checks.push_back({std::move(name), passed, std::move(detail)});
}

bool RunReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome &c) {
        return c.passed;
    });
}

int RunReport::exit_code() const {
    if (internal_error) {
        return EXIT_INTERNAL;
    }
    return all_passed() ? EXIT_PASS : EXIT_FAIL;
}

std::string RunReport::digest() const {
    uint64_t h = 14695981039346656037ull;
    auto feed = [&](const std::string &s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ull;
        }
        h ^= 0xff;
        h *= 1099511628211ull;
    };
    feed(command);
    for (const auto &[k, v] : inputs) {
        feed(k);
        feed(v);
    }
    for (const auto &[k, v] : config) {
        feed(k);
        feed(v);
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)h);
    return buf;
}

std::string table_text(const ReportTable &table) {
    std::vector<size_t> width(table.columns.size());
    for (size_t c = 0; c < table.columns.size(); c++) {
        width[c] = table.columns[c].size();
        for (const auto &row : table.rows) {
            if (c < row.size()) {
                width[c] = std::max(width[c], row[c].size());
            }
        }
    }
    std::ostringstream out;
    auto line = [&](const std::vector<std::string> &cells) {
        for (size_t c = 0; c < cells.size(); c++) {
            out << (c ? "  " : "") << cells[c];
            if (c + 1 < cells.size() && c < width.size()) {
                out << std::string(width[c] - cells[c].size(), ' ');
            }
        }
        out << "\n";
    };
    out << "# ";
    line(table.columns);
    for (const auto &row : table.rows) {
        out << "  ";
        line(row);
    }
    return out.str();
}

std::string RunReport::to_text() const {
    std::ostringstream out;
    out << "picodes " << PICODES_VERSION << " | " << command << "\n";
    out << "inputs digest: " << digest() << "\n";
    if (!config.empty()) {
        out << "config:";
        for (const auto &[k, v] : config) {
            out << " " << k << "=" << v;
        }
        out << "\n";
    }
    for (const auto &[k, v] : inputs) {
        out << "input " << k << ": " << v << "\n";
    }
    for (const auto &n : notes) {
        out << "note: " << n << "\n";
    }
    for (const auto &t : tables) {
        out << "table " << t.title << "\n" << table_text(t);
    }
    for (const auto &c : checks) {
        out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.detail.empty()) {
            out << ": " << c.detail;
        }
        out << "\n";
    }
    if (internal_error) {
        out << "INTERNAL ERROR: see failed checks\n";
    }
    out << "verdict: " << verdict << "\n";
    return out.str();
}

std::string RunReport::to_structured() const {
    using nlohmann::ordered_json;
    ordered_json j;
    j["tool"] = std::string("picodes ") + PICODES_VERSION;
    j["command"] = command;
    j["digest"] = digest();
    j["inputs"] = ordered_json::object();
    for (const auto &[k, v] : inputs) {
        j["inputs"][k] = v;
    }
    j["config"] = ordered_json::object();
    for (const auto &[k, v] : config) {
        j["config"][k] = v;
    }
    j["notes"] = notes;
    j["tables"] = ordered_json::array();
    for (const auto &t : tables) {
        j["tables"].push_back({{"title", t.title}, {"columns", t.columns}, {"rows", t.rows}});
    }
    j["checks"] = ordered_json::array();
    for (const auto &c : checks) {
        j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    j["internal_error"] = internal_error;
    j["verdict"] = verdict;
    j["exit_code"] = exit_code();
    return j.dump(2) + "\n";
}

std::string RunReport::render(const std::string &format) const {
    if (format == "text") {
        return to_text();
    }
    if (format == "structured") {
        return to_structured();
    }
    throw std::invalid_argument("unknown report format '" + format + "'");
}

}  // namespace picodes

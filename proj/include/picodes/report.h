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

#ifndef _PICODES_REPORT_H
#define _PICODES_REPORT_H

#include <string>
#include <utility>
#include <vector>

namespace picodes {

constexpr const char *PICODES_VERSION = "0.1.0";

enum ExitCode : int {
    EXIT_PASS = 0,
    EXIT_FAIL = 1,
    EXIT_USAGE = 2,
    EXIT_INTERNAL = 3,
};

/// Fixed 12-significant-digit rendering used by every report.
std::string fmt_num(double x);

struct CheckOutcome {
    std::string name;
    bool passed;
    std::string detail;
};

struct ReportTable {
    std::string title;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

/// Deterministic record of one command run.
struct RunReport {
    std::string command;
    /// Inputs that determine the result; hashed into the digest.
    std::vector<std::pair<std::string, std::string>> inputs;
    /// Tolerances and other configuration echoed for audits.
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<CheckOutcome> checks;
    std::vector<ReportTable> tables;
    std::vector<std::string> notes;
    std::string verdict;
    /// Set for bugs such as an engine/oracle disagreement.
    bool internal_error = false;

    void check(std::string name, bool passed, std::string detail);
    bool all_passed() const;
    int exit_code() const;
    /// FNV-1a 64 over command, inputs and config, as 16 hex digits.
    std::string digest() const;
    std::string to_text() const;
    std::string to_structured() const;
    std::string render(const std::string &format) const;
};

/// Plain text table with aligned columns (for plotting tools as well).
std::string table_text(const ReportTable &table);

}  // namespace picodes

#endif

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

#ifndef _PICODES_COMMANDS_H
#define _PICODES_COMMANDS_H

#include <cstdint>
#include <string>

#include "picodes/report.h"

namespace picodes {

struct CommandOptions {
    /// Scale-free residual threshold for the condition engine.
    double tol = 1e-9;
    /// Full-space oracle tolerance.
    double oracle_tol = 1e-8;
    int precision = 50;
    int grid_nx = 201;
    int grid_ny = 201;
    uint64_t seed = 1;
};

/// Oracle verdict for a code file and error set, cross-checked against the
/// condition engine where a compressed system exists.
RunReport cmd_verify(const std::string &codefile, const std::string &errorset, const CommandOptions &opt);

/// action: "list", "export" (id, out_path; "-" writes to the report notes) or "validate".
RunReport cmd_catalog(
    const std::string &action, const std::string &id, const std::string &out_path, const CommandOptions &opt);

struct Search9Spec {
    /// "t" scans the real family; "xy" scans the complex double-error family.
    std::string mode = "t";
    double t_min = -0.25;
    double t_max = 0.4;
    double t_step = 0.05;
    double x_min = 0.01;
    double x_max = 10;
    double y_min = -10;
    double y_max = 10;
    int nx = 50;
    int ny = 50;
    /// +1, -1 or 0 for both branches.
    int branch = 0;
};

RunReport cmd_search9(const Search9Spec &spec, const CommandOptions &opt);

/// mode: "full", "drop-ImXY" or "drop-Y".
RunReport cmd_nogo(const std::string &mode, const CommandOptions &opt);

RunReport cmd_decompose(int n, bool verify, const CommandOptions &opt);

}  // namespace picodes

#endif

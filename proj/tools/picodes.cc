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

#include <cstdio>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "picodes/code_file.h"
#include "picodes/commands.h"

using namespace picodes;

namespace {

void parse_grid(const std::string &text, int *nx, int *ny) {
    auto x = text.find('x');
    if (x == std::string::npos) {
        throw std::invalid_argument("--grid expects <nx>x<ny>");
    }
    *nx = std::stoi(text.substr(0, x));
    *ny = std::stoi(text.substr(x + 1));
    if (*nx < 2 || *ny < 1) {
        throw std::invalid_argument("--grid needs nx >= 2 and ny >= 1");
    }
}

std::vector<double> parse_range(const std::string &text, size_t count, const char *flag) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ':')) {
        out.push_back(std::stod(part));
    }
    if (out.size() != count) {
        throw std::invalid_argument(std::string(flag) + " expects " + std::to_string(count) + " ':'-separated numbers");
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Permutationally invariant quantum codes: verification, catalog, searches and no-go checks."};
    app.require_subcommand(1);
    app.fallthrough();
    CommandOptions opt;
    std::string format = "text";
    std::string grid = "201x201";
    app.add_option("--tol", opt.tol, "Scale-free residual threshold for the condition engine")->capture_default_str();
    app.add_option("--oracle-tol", opt.oracle_tol, "Full-space Gram matrix tolerance")->capture_default_str();
    app.add_option("--precision", opt.precision, "Decimal digits for root polishing")->capture_default_str();
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "structured"}))->capture_default_str();
    app.add_option("--grid", grid, "Scan grid <nx>x<ny>")->capture_default_str();
    app.add_option("--seed", opt.seed, "Seed for random sampling")->capture_default_str();

    std::string codefile, errorset;
    auto *verify = app.add_subcommand("verify", "Check a code file against an error set");
    verify->add_option("codefile", codefile, "Code file (JSON)")->required();
    verify->add_option("errorset", errorset, "Error set name or custom:<word>,<word>,...")->required();

    std::string action, id, out_path;
    auto *cat = app.add_subcommand("catalog", "List, export or validate the built-in codes");
    cat->add_option("action", action, "list | export | validate")
        ->required()
        ->check(CLI::IsMember({"list", "export", "validate"}));
    cat->add_option("id", id, "Entry id (export)");
    cat->add_option("-o,--output", out_path, "Output path for export ('-' prints)");

    Search9Spec search;
    std::string t_range, xy_range, xy_grid;
    auto *s9 = app.add_subcommand("search9", "Sample the n = 9 code families");
    s9->add_option("--t", t_range, "Real family: t_min:t_max:step (default -0.25:0.4:0.05)");
    s9->add_option("--xy", xy_range, "Complex family: x_min:x_max:y_min:y_max");
    s9->add_option("--xy-grid", xy_grid, "Complex family grid <nx>x<ny> (default 50x50)");
    s9->add_option("--branch", search.branch, "+1, -1 or 0 for both")->capture_default_str();

    std::string mode;
    auto *nogo = app.add_subcommand("nogo", "Nine-qubit double-error no-go checks");
    nogo->add_option("mode", mode, "full | drop-ImXY | drop-Y")
        ->required()
        ->check(CLI::IsMember({"full", "drop-ImXY", "drop-Y"}));

    int n = 0;
    bool spectral = false;
    auto *dec = app.add_subcommand("decompose", "Irreducible decomposition of the weight spaces");
    dec->add_option("n", n, "Number of qubits (3..12)")->required();
    dec->add_flag("--verify", spectral, "Diagonalize S^2 on each weight block (n <= 9)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : EXIT_USAGE;
    }

    try {
        parse_grid(grid, &opt.grid_nx, &opt.grid_ny);
        RunReport report;
        if (*verify) {
            report = cmd_verify(codefile, errorset, opt);
        } else if (*cat) {
            if (action == "export" && id.empty()) {
                throw std::invalid_argument("catalog export needs an id");
            }
            report = cmd_catalog(action, id, out_path, opt);
        } else if (*s9) {
            if (!xy_range.empty()) {
                auto v = parse_range(xy_range, 4, "--xy");
                search.mode = "xy";
                search.x_min = v[0];
                search.x_max = v[1];
                search.y_min = v[2];
                search.y_max = v[3];
                if (!xy_grid.empty()) {
                    parse_grid(xy_grid, &search.nx, &search.ny);
                }
            } else if (!t_range.empty()) {
                auto v = parse_range(t_range, 3, "--t");
                search.t_min = v[0];
                search.t_max = v[1];
                search.t_step = v[2];
            }
            report = cmd_search9(search, opt);
        } else if (*nogo) {
            report = cmd_nogo(mode, opt);
        } else if (*dec) {
            report = cmd_decompose(n, spectral, opt);
        }
        std::cout << report.render(format);
        return report.exit_code();
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const CodeFileError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return EXIT_INTERNAL;
    }
}

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

#include "picodes/kl_checker.h"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace picodes {

double KLReport::max_B() const {
    return B.size() ? B.cwiseAbs().maxCoeff() : 0.0;
}

double KLReport::max_D_gap() const {
    return D00.size() ? (D00 - D11).cwiseAbs().maxCoeff() : 0.0;
}

KLReport kl_matrices(const DickeCode &code, std::span<const ErrorOp> errors, double tol) {
    int n = code.n;
    if (n > MAX_ORACLE_QUBITS) {
        throw std::invalid_argument("kl_matrices: code too large for the full-space oracle");
    }
    for (const auto &e : errors) {
        if (e.max_qubit() > n) {
            throw std::invalid_argument(
                "kl_matrices: error '" + e.label() + "' acts outside the " + std::to_string(n) + "-qubit register");
        }
    }
    DenseState w0 = embed(code.c0.normalized());
    DenseState w1 = embed(code.c1.normalized());
    size_t dim = w0.size();
    Eigen::Index m = (Eigen::Index)errors.size();
    Eigen::MatrixXcd M0(dim, m);
    Eigen::MatrixXcd M1(dim, m);
    for (Eigen::Index p = 0; p < m; p++) {
        DenseState a = apply(errors[p], w0);
        DenseState b = apply(errors[p], w1);
        M0.col(p) = Eigen::Map<const Eigen::VectorXcd>(a.amps.data(), dim);
        M1.col(p) = Eigen::Map<const Eigen::VectorXcd>(b.amps.data(), dim);
    }
    KLReport r;
    r.n = n;
    for (const auto &e : errors) {
        r.error_labels.push_back(e.label());
    }
    r.D00 = M0.adjoint() * M0;
    r.D11 = M1.adjoint() * M1;
    r.B = M0.adjoint() * M1;
    r.tolerance = tol;
    for (Eigen::Index p = 0; p < m; p++) {
        for (Eigen::Index q = 0; q < m; q++) {
            double b = std::abs(r.B(p, q));
            if (b > tol) {
                r.violations.push_back({"B", (int)p, (int)q, b});
            }
        }
    }
    for (Eigen::Index p = 0; p < m; p++) {
        for (Eigen::Index q = p; q < m; q++) {
            double d = std::abs(r.D00(p, q) - r.D11(p, q));
            if (d > tol) {
                r.violations.push_back({"D00-D11", (int)p, (int)q, d});
            }
        }
    }
    r.correctable = r.violations.empty();
    return r;
}

std::vector<ErrorOp> symmetrized_error_set(int n) {
    if (n < 2) {
        throw std::invalid_argument("symmetrized_error_set: requires n >= 2");
    }
    std::vector<ErrorOp> out{
        ops::identity(),
        ops::average(Pauli::X, n),
        ops::average(Pauli::Y, n),
        ops::average(Pauli::Z, n),
    };
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        for (int k = 2; k <= n; k++) {
            out.push_back(ops::difference(p, 1, k));
        }
    }
    return out;
}

namespace {

void append_singles(std::vector<ErrorOp> &out, Pauli p, int n) {
    for (int r = 1; r <= n; r++) {
        out.push_back(ops::pauli(p, r));
    }
}

void append_doubles(std::vector<ErrorOp> &out, Pauli p, int n) {
    for (int r = 1; r <= n; r++) {
        for (int s = r + 1; s <= n; s++) {
            out.push_back(ops::pauli_pair(p, r, s));
        }
    }
}

void append_exchanges(std::vector<ErrorOp> &out, int n) {
    for (int r = 1; r <= n; r++) {
        for (int s = r + 1; s <= n; s++) {
            out.push_back(ops::pair(PairKind::E, r, s));
        }
    }
}

std::vector<ErrorOp> parse_custom(const std::string &spec, int n) {
    std::vector<ErrorOp> out;
    std::stringstream ss(spec);
    std::string word;
    while (std::getline(ss, word, ',')) {
        if (word.empty()) {
            continue;
        }
        if ((int)word.size() != n) {
            throw std::invalid_argument(
                "custom error set: word '" + word + "' must have exactly " + std::to_string(n) + " characters");
        }
        out.push_back(ops::pauli_word(word));
    }
    if (out.empty()) {
        throw std::invalid_argument("custom error set: no Pauli words given");
    }
    return out;
}

}  // namespace

std::vector<std::string> error_set_names() {
    return {
        "onebit",
        "onebit+exchange",
        "exchange",
        "raw-onebit",
        "x-single",
        "z-single",
        "z-doubles",
        "x-doubles",
        "same-type-doubles",
        "phase-single-double",
        "x1-all-doubles",
        "z1-all-doubles",
        "xz-zz",
    };
}

std::vector<ErrorOp> named_error_set(const std::string &name, int n) {
    if (name.rfind("custom:", 0) == 0) {
        return parse_custom(name.substr(7), n);
    }
    std::vector<ErrorOp> out;
    if (name == "onebit" || name == "onebit+exchange" || name == "z-doubles" || name == "x-doubles") {
        out = symmetrized_error_set(n);
        if (name == "onebit+exchange") {
            append_exchanges(out, n);
        } else if (name == "z-doubles") {
            append_doubles(out, Pauli::Z, n);
        } else if (name == "x-doubles") {
            append_doubles(out, Pauli::X, n);
        }
        return out;
    }
    out.push_back(ops::identity());
    if (name == "exchange") {
        append_exchanges(out, n);
    } else if (name == "raw-onebit") {
        append_singles(out, Pauli::X, n);
        append_singles(out, Pauli::Y, n);
        append_singles(out, Pauli::Z, n);
    } else if (name == "x-single") {
        append_singles(out, Pauli::X, n);
    } else if (name == "z-single") {
        append_singles(out, Pauli::Z, n);
    } else if (name == "same-type-doubles") {
        append_doubles(out, Pauli::X, n);
        append_doubles(out, Pauli::Y, n);
        append_doubles(out, Pauli::Z, n);
    } else if (name == "phase-single-double") {
        append_singles(out, Pauli::Z, n);
        append_doubles(out, Pauli::Z, n);
    } else if (name == "x1-all-doubles") {
        append_singles(out, Pauli::X, n);
        append_doubles(out, Pauli::X, n);
        append_doubles(out, Pauli::Y, n);
        append_doubles(out, Pauli::Z, n);
    } else if (name == "z1-all-doubles") {
        append_singles(out, Pauli::Z, n);
        append_doubles(out, Pauli::Z, n);
        append_doubles(out, Pauli::X, n);
        append_doubles(out, Pauli::Y, n);
    } else if (name == "xz-zz") {
        append_singles(out, Pauli::X, n);
        append_singles(out, Pauli::Z, n);
        append_doubles(out, Pauli::Z, n);
    } else {
        throw std::invalid_argument("unknown error set '" + name + "'");
    }
    return out;
}

std::optional<SignClass> sign_class(const ErrorOp &op) {
    std::optional<SignClass> result;
    for (const auto &t : op.terms()) {
        SignClass c{1, 1};
        if (auto w = std::get_if<PauliWord>(&t.op)) {
            int nx = 0, ny = 0, nz = 0;
            for (const auto &[q, p] : w->factors) {
                nx += p == Pauli::X;
                ny += p == Pauli::Y;
                nz += p == Pauli::Z;
            }
            c.eps_Z = ((nx + ny) % 2) ? -1 : 1;
            c.eps_X = ((ny + nz) % 2) ? -1 : 1;
        }
        if (!result) {
            result = c;
        } else if (result->eps_Z != c.eps_Z || result->eps_X != c.eps_X) {
            return std::nullopt;
        }
    }
    return result;
}

std::vector<RepSector> symmetrized_sectors(int n) {
    std::vector<RepSector> out(4, RepSector::trivial);
    out.resize(3 * n + 1, RepSector::standard);
    return out;
}

std::vector<BlockViolation> block_structure_check(
    const KLReport &report, std::span<const SignClass> classes, std::span<const RepSector> sectors, double tol) {
    int m = (int)report.error_labels.size();
    if ((int)classes.size() != m) {
        throw std::invalid_argument("block_structure_check: one sign class per error required");
    }
    if (!sectors.empty() && (int)sectors.size() != m) {
        throw std::invalid_argument("block_structure_check: one sector per error required");
    }
    std::vector<BlockViolation> out;
    auto flag = [&](const char *rule, const char *matrix, int p, int q, double mag) {
        if (mag > tol) {
            out.push_back({rule, matrix, p, q, mag});
        }
    };
    for (int p = 0; p < m; p++) {
        for (int q = 0; q < m; q++) {
            const SignClass &cp = classes[p];
            const SignClass &cq = classes[q];
            if (cp.eps_Z != cq.eps_Z) {
                flag("A", "D00", p, q, std::abs(report.D00(p, q)));
                flag("A", "D11", p, q, std::abs(report.D11(p, q)));
            } else {
                flag("B", "B", p, q, std::abs(report.B(p, q)));
            }
            double ex = cp.eps_X * cq.eps_X;
            flag("C", "D00,D11", p, q, std::abs(report.D00(p, q) - ex * report.D11(p, q)));
            flag("E", "B", p, q, std::abs(report.B(p, q) - ex * std::conj(report.B(q, p))));
            if (!sectors.empty()) {
                RepSector sp = sectors[p];
                RepSector sq = sectors[q];
                bool cross = (sp == RepSector::trivial && sq == RepSector::standard) ||
                             (sp == RepSector::standard && sq == RepSector::trivial);
                if (cross) {
                    flag("ortho", "D00", p, q, std::abs(report.D00(p, q)));
                    flag("ortho", "D11", p, q, std::abs(report.D11(p, q)));
                    flag("ortho", "B", p, q, std::abs(report.B(p, q)));
                }
            }
        }
    }
    return out;
}

double circulant_deviation(const DickeCode &code, Pauli p) {
    std::vector<ErrorOp> errors;
    append_singles(errors, p, code.n);
    KLReport r = kl_matrices(code, errors);
    double worst = 0;
    for (const Eigen::MatrixXcd *d : {&r.D00, &r.D11}) {
        Complex diag = (*d)(0, 0);
        Complex off = (*d)(0, 1);
        for (int i = 0; i < code.n; i++) {
            for (int j = 0; j < code.n; j++) {
                Complex ref = i == j ? diag : off;
                worst = std::max(worst, std::abs((*d)(i, j) - ref));
            }
        }
    }
    return worst;
}

namespace {

nlohmann::json matrix_json(const Eigen::MatrixXcd &m) {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); i++) {
        nlohmann::json rr = nlohmann::json::array();
        nlohmann::json ii = nlohmann::json::array();
        for (Eigen::Index j = 0; j < m.cols(); j++) {
            rr.push_back(m(i, j).real());
            ii.push_back(m(i, j).imag());
        }
        re.push_back(rr);
        im.push_back(ii);
    }
    return {{"re", re}, {"im", im}};
}

}  // namespace

std::string kl_report_json(const KLReport &report, int indent) {
    nlohmann::json j;
    j["n"] = report.n;
    j["error_labels"] = report.error_labels;
    j["D00"] = matrix_json(report.D00);
    j["D11"] = matrix_json(report.D11);
    j["B"] = matrix_json(report.B);
    j["tolerance"] = report.tolerance;
    j["correctable"] = report.correctable;
    nlohmann::json v = nlohmann::json::array();
    for (const auto &x : report.violations) {
        v.push_back({{"matrix", x.matrix}, {"p", x.p}, {"q", x.q}, {"magnitude", x.magnitude}});
    }
    j["violations"] = v;
    return j.dump(indent);
}

}  // namespace picodes

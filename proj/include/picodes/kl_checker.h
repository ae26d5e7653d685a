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

#ifndef _PICODES_KL_CHECKER_H
#define _PICODES_KL_CHECKER_H

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "picodes/full_space.h"

namespace picodes {

constexpr double KL_DEFAULT_TOL = 1e-8;

struct KLViolation {
    std::string matrix;  // "B" or "D00-D11"
    int p;
    int q;
    double magnitude;
};

struct KLReport {
    int n;
    std::vector<std::string> error_labels;
    Eigen::MatrixXcd D00;
    Eigen::MatrixXcd D11;
    Eigen::MatrixXcd B;
    double tolerance;
    bool correctable;
    std::vector<KLViolation> violations;

    double max_B() const;
    double max_D_gap() const;
};

/// Gram matrices over the unit-normalized code words, computed in the full
/// 2^n space. Throws std::invalid_argument when an error references a qubit
/// outside 1..n or the code is too large for the oracle.
KLReport kl_matrices(const DickeCode &code, std::span<const ErrorOp> errors, double tol = KL_DEFAULT_TOL);

/// {I, avgX, avgY, avgZ, X1-Xk, Y1-Yk, Z1-Zk for k = 2..n}, 3n+1 operators.
std::vector<ErrorOp> symmetrized_error_set(int n);

/// Named error sets used by the catalog and the CLI. Recognized names:
/// onebit, onebit+exchange, exchange, raw-onebit, x-single, z-single,
/// z-doubles, x-doubles, same-type-doubles, phase-single-double,
/// x1-all-doubles, z1-all-doubles, xz-zz, and custom:<word>,<word>,...
/// Throws std::invalid_argument for unknown names.
std::vector<ErrorOp> named_error_set(const std::string &name, int n);
std::vector<std::string> error_set_names();

struct SignClass {
    int eps_Z;
    int eps_X;
};

/// Commutation signs with the all-qubit Z and X operators, or nothing when
/// the terms of `op` disagree.
std::optional<SignClass> sign_class(const ErrorOp &op);

/// Which symmetric-group component an error belongs to, when known.
enum class RepSector { trivial, standard, unknown };
std::vector<RepSector> symmetrized_sectors(int n);

struct BlockViolation {
    std::string rule;
    std::string matrix;
    int p;
    int q;
    double magnitude;
};

/// Checks the zero pattern and sign relations that follow from conditions
/// I and II alone:
///   A: D^ii_pq = 0 when eps_Z differs.
///   B: B_pq = 0 when eps_Z agrees.
///   C: D00_pq = eps_X_p eps_X_q D11_pq.
///   E: B_pq = eps_X_p eps_X_q conj(B_qp).
///   ortho: trivial-sector vs standard-sector entries vanish (only when
///          `sectors` is non-empty).
std::vector<BlockViolation> block_structure_check(
    const KLReport &report,
    std::span<const SignClass> classes,
    std::span<const RepSector> sectors = {},
    double tol = 1e-10);

/// Largest spread of the diagonal and of the off-diagonal entries of D^ii
/// over {P_1, ..., P_n}; zero when the blocks are circulant.
double circulant_deviation(const DickeCode &code, Pauli p);

/// Structured rendering: labels, re/im matrices, verdict, violations.
std::string kl_report_json(const KLReport &report, int indent = 2);

}  // namespace picodes

#endif

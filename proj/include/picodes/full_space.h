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

#ifndef _PICODES_FULL_SPACE_H
#define _PICODES_FULL_SPACE_H

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "picodes/dicke_states.h"

namespace picodes {

constexpr int MAX_ORACLE_QUBITS = 12;

/// Dense 2^n amplitude vector. Qubit 1 is the most significant bit of the index.
struct DenseState {
    int n;
    std::vector<Complex> amps;

    explicit DenseState(int n);
    DenseState(int n, std::vector<Complex> amps);
    static DenseState basis_string(const std::string &bits);

    size_t size() const {
        return amps.size();
    }
    Complex inner(const DenseState &other) const;
    double norm() const;
    DenseState normalized() const;
    DenseState scaled(Complex factor) const;
    DenseState operator+(const DenseState &other) const;
    DenseState operator-(const DenseState &other) const;
    double distance(const DenseState &other) const;
};

/// Bit mask of qubit r (1-based) in an n-qubit index.
inline uint32_t qubit_mask(int n, int r) {
    return uint32_t(1) << (n - r);
}

enum class Pauli : char { X = 'X', Y = 'Y', Z = 'Z' };
enum class PairKind : char { E = 'E', F = 'F', G = 'G', H = 'H' };

struct IdentityOp {};

/// Tensor product of single-qubit Paulis on distinct qubits.
struct PauliWord {
    std::vector<std::pair<int, Pauli>> factors;
};

/// Exchange E_rs and its partners F_rs, G_rs, H_rs.
struct PairOp {
    PairKind kind;
    int r;
    int s;
};

using Primitive = std::variant<IdentityOp, PauliWord, PairOp>;

struct OpTerm {
    Complex coeff;
    Primitive op;
};

/// Finite linear combination of primitives, with a display label.
class ErrorOp {
   public:
    ErrorOp() = default;
    ErrorOp(std::string label, std::vector<OpTerm> terms);

    const std::string &label() const {
        return label_;
    }
    const std::vector<OpTerm> &terms() const {
        return terms_;
    }
    ErrorOp with_label(std::string label) const;
    /// Largest qubit index referenced (0 for pure identity).
    int max_qubit() const;

    ErrorOp operator+(const ErrorOp &other) const;
    ErrorOp operator-(const ErrorOp &other) const;
    ErrorOp operator*(Complex factor) const;

   private:
    std::string label_;
    std::vector<OpTerm> terms_;
};

namespace ops {

ErrorOp identity();
ErrorOp pauli(Pauli p, int r);
/// Pauli word from a string over {I,X,Y,Z}; character j acts on qubit j+1.
ErrorOp pauli_word(const std::string &word);
/// P_r P_s for r != s.
ErrorOp pauli_pair(Pauli p, int r, int s);
ErrorOp pair(PairKind kind, int r, int s);
/// (1/n) sum_r P_r.
ErrorOp average(Pauli p, int n);
/// P_r - P_s.
ErrorOp difference(Pauli p, int r, int s);
/// Average of P_r P_s over ordered pairs r != s.
ErrorOp average_double(Pauli p, int n);
/// Tensor product of P over all n qubits.
ErrorOp all_qubits(Pauli p, int n);

}  // namespace ops

/// Exact action of op on psi. Throws std::out_of_range for bad qubit indices.
DenseState apply(const ErrorOp &op, const DenseState &psi);

DenseState embed(const DickeVector &v);
DenseState embed(const VExpansion &e);

/// H^{tensor n} psi.
DenseState hadamard_transform(const DenseState &psi);

/// True iff E_{1s} psi = psi for s = 2..n within tol * max(1, |psi|).
bool permutation_invariance_check(const DenseState &psi, double tol = 1e-10);

/// Weight-basis coefficients of the symmetric projection of psi.
DickeVector project_to_dicke(const DenseState &psi);

/// |C_j> = H|c0> + (-1)^j H|c1>, re-expressed in the weight basis and
/// normalized. Throws std::logic_error if the image is not permutation
/// invariant.
DickeCode hadamard_code_map(const DickeCode &code);

}  // namespace picodes

#endif

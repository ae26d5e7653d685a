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

#ifndef _PICODES_REP_THEORY_H
#define _PICODES_REP_THEORY_H

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "picodes/combinatorics.h"

namespace picodes {

/// Irreducible representation of S_n with two-row partition [n - j, j].
struct IrrepLabel {
    int n;
    int j;

    std::pair<int, int> partition() const {
        return {n - j, j};
    }
    /// C(n, j) - C(n, j - 1), always recomputed.
    BigInt dim() const;
    /// Total spin (n - 2j)/2.
    double spin() const;
    std::string spin_text() const;
    /// S^2 eigenvalue s(s + 1).
    double casimir() const;
    std::string partition_text() const;
    bool operator==(const IrrepLabel &other) const = default;
};

/// Irreducible pieces of the weight-k subspace: j = 0..min(k, n - k),
/// each once. Throws std::invalid_argument unless 0 <= k <= n.
std::vector<IrrepLabel> decompose_weight_space(int n, int k);

struct DecompositionTable {
    int n;
    std::vector<std::vector<IrrepLabel>> rows;

    /// Aligned text: one "W_k = U_k^d + ..." line per weight. A repeated
    /// dimension from a different partition is marked with '~'.
    std::string to_text() const;
    /// Dims per row, for comparison with printed tables.
    std::vector<std::vector<long>> dims() const;
};

DecompositionTable decomposition_table(int n);

struct CountingReport {
    int n;
    /// (irrep, number of weight spaces containing it), ordered by j.
    std::vector<std::pair<IrrepLabel, int>> multiplicities;
    /// One-bit budget: 4 pairs of trivial and 3 pairs of (n-1)-dim pieces.
    int onebit_trivial_used;
    int onebit_standard_used;
    std::string summary;
};

CountingReport counting_report(int n);

struct DoubleErrorSplit {
    long trivial;
    long standard;
    long remainder;
    bool sum_matches_pairs;
};

/// (1, n - 1, n(n - 3)/2) for one type of double error. Requires n >= 4.
DoubleErrorSplit double_error_split(int n);

struct SpectralBlock {
    int k;
    /// (s(s+1), multiplicity) observed, ascending.
    std::vector<std::pair<double, int>> observed;
    bool matches;
};

/// Diagonalizes S^2 on every weight block of the full space. Requires n <= 9.
std::vector<SpectralBlock> spectral_blocks(int n);
bool spectral_verify(int n);

struct ExampleSplitCheck {
    /// Ranks of the trivial, (n-1)-dim and printed pieces as coefficient
    /// vectors over the six pairs; expected (1, 3, 2).
    std::array<int, 3> coefficient_ranks;
    double coefficient_overlap;
    /// Same ranks after realizing P_r P_s on W_2, for P = X, Y, Z. On W_2 a
    /// pair and its complementary pair act identically when n = 4, so the
    /// (n-1)-dim piece realizes to zero and the expected ranks are (1, 0, 2).
    std::vector<std::array<int, 3>> realized_ranks;
    /// Largest normalized overlap between a printed vector's image and the
    /// other images.
    double realized_overlap;
    bool passed;
};

/// Checks the two printed n = 4 basis combinations of pair errors against
/// the trivial and (n-1)-dim pieces, as coefficient vectors and as
/// operators on the weight-2 state.
ExampleSplitCheck n4_example_check();

}  // namespace picodes

#endif

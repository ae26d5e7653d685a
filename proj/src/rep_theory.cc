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

#include "picodes/rep_theory.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "picodes/full_space.h"

namespace picodes {

BigInt IrrepLabel::dim() const {
    return binomial(n, j) - binomial(n, j - 1);
}

double IrrepLabel::spin() const {
    return (n - 2 * j) / 2.0;
}

std::string IrrepLabel::spin_text() const {
    int twice = n - 2 * j;
    return twice % 2 ? std::to_string(twice) + "/2" : std::to_string(twice / 2);
}

double IrrepLabel::casimir() const {
    double s = spin();
    return s * (s + 1);
}

std::string IrrepLabel::partition_text() const {
    return j == 0 ? "[" + std::to_string(n) + "]" : "[" + std::to_string(n - j) + "," + std::to_string(j) + "]";
}

std::vector<IrrepLabel> decompose_weight_space(int n, int k) {
    if (n < 0 || k < 0 || k > n) {
        throw std::invalid_argument("decompose_weight_space: need 0 <= k <= n");
    }
    std::vector<IrrepLabel> out;
    for (int j = 0; j <= std::min(k, n - k); j++) {
        out.push_back({n, j});
    }
    return out;
}

DecompositionTable decomposition_table(int n) {
    DecompositionTable t{n, {}};
    for (int k = 0; k <= n; k++) {
        t.rows.push_back(decompose_weight_space(n, k));
    }
    return t;
}

std::vector<std::vector<long>> DecompositionTable::dims() const {
    std::vector<std::vector<long>> out;
    for (const auto &row : rows) {
        std::vector<long> d;
        for (const auto &label : row) {
            d.push_back(label.dim().convert_to<long>());
        }
        out.push_back(d);
    }
    return out;
}

std::string DecompositionTable::to_text() const {
    // Irreps sharing a dimension with a smaller j get a '~'.
    std::map<long, int> first_j;
    for (int j = 0; 2 * j <= n; j++) {
        first_j.emplace(IrrepLabel{n, j}.dim().convert_to<long>(), j);
    }
    std::ostringstream out;
    int width = (int)std::to_string(n).size();
    for (size_t k = 0; k < rows.size(); k++) {
        std::string head = "W_" + std::to_string(k);
        out << head << std::string(width + 2 - head.size() + 1, ' ') << "=";
        for (size_t i = 0; i < rows[k].size(); i++) {
            const auto &label = rows[k][i];
            long d = label.dim().convert_to<long>();
            out << (i ? " + " : " ") << "U_" << k << "^" << d << (first_j[d] != label.j ? "~" : "");
        }
        out << "\n";
    }
    return out.str();
}

CountingReport counting_report(int n) {
    CountingReport rep{n, {}, 4, 3, ""};
    for (int j = 0; 2 * j <= n; j++) {
        // [n-j, j] occurs in W_k for j <= k <= n - j.
        rep.multiplicities.push_back({IrrepLabel{n, j}, n - 2 * j + 1});
    }
    std::ostringstream s;
    for (size_t i = 0; i < rep.multiplicities.size(); i++) {
        const auto &[label, count] = rep.multiplicities[i];
        s << (i ? ", " : "") << count << " x dim " << label.dim() << " " << label.partition_text();
    }
    int trivial = rep.multiplicities[0].second;
    int standard = rep.multiplicities.size() > 1 ? rep.multiplicities[1].second : 0;
    s << "; one-bit correction needs " << 2 * rep.onebit_trivial_used << " trivial (" << trivial << " available) and "
      << 2 * rep.onebit_standard_used << " (n-1)-dimensional (" << standard << " available)";
    rep.summary = s.str();
    return rep;
}

DoubleErrorSplit double_error_split(int n) {
    if (n < 4) {
        throw std::invalid_argument("double_error_split: need n >= 4");
    }
    DoubleErrorSplit d{1, n - 1, (long)n * (n - 3) / 2, false};
    d.sum_matches_pairs = d.trivial + d.standard + d.remainder == (long)n * (n - 1) / 2;
    return d;
}

namespace {

std::vector<uint32_t> weight_indices(int n, int k) {
    std::vector<uint32_t> out;
    for (uint32_t b = 0; b < (uint32_t(1) << n); b++) {
        if (std::popcount(b) == k) {
            out.push_back(b);
        }
    }
    return out;
}

/// S^2 = (3n/4) I + (1/2) sum_{r<s} (X_r X_s + Y_r Y_s + Z_r Z_s).
Eigen::MatrixXd casimir_block(int n, int k) {
    std::vector<uint32_t> basis = weight_indices(n, k);
    std::map<uint32_t, int> position;
    for (size_t i = 0; i < basis.size(); i++) {
        position[basis[i]] = (int)i;
    }
    ErrorOp pairs = ops::identity() * Complex(0.75 * n);
    for (int r = 1; r <= n; r++) {
        for (int s = r + 1; s <= n; s++) {
            for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
                pairs = pairs + ops::pauli_pair(p, r, s) * Complex(0.5);
            }
        }
    }
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(basis.size(), basis.size());
    for (size_t col = 0; col < basis.size(); col++) {
        DenseState e(n);
        e.amps[basis[col]] = 1;
        DenseState img = apply(pairs, e);
        for (size_t idx = 0; idx < img.size(); idx++) {
            if (std::abs(img.amps[idx]) > 1e-14) {
                auto it = position.find((uint32_t)idx);
                if (it == position.end() || std::abs(img.amps[idx].imag()) > 1e-12) {
                    throw std::logic_error("casimir_block: S^2 left the weight space");
                }
                m(it->second, col) = img.amps[idx].real();
            }
        }
    }
    return m;
}

}  // namespace

std::vector<SpectralBlock> spectral_blocks(int n) {
    if (n < 1 || n > 9) {
        throw std::invalid_argument("spectral_verify: need 1 <= n <= 9");
    }
    std::vector<SpectralBlock> out;
    for (int k = 0; k <= n; k++) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(casimir_block(n, k), Eigen::EigenvaluesOnly);
        SpectralBlock block{k, {}, true};
        for (double v : solver.eigenvalues()) {
            if (!block.observed.empty() && std::abs(block.observed.back().first - v) <= 1e-8) {
                block.observed.back().second++;
            } else {
                block.observed.push_back({v, 1});
            }
        }
        std::vector<std::pair<double, int>> expected;
        for (const auto &label : decompose_weight_space(n, k)) {
            expected.push_back({label.casimir(), label.dim().convert_to<int>()});
        }
        std::sort(expected.begin(), expected.end());
        block.matches = expected.size() == block.observed.size();
        for (size_t i = 0; block.matches && i < expected.size(); i++) {
            block.matches = std::abs(expected[i].first - block.observed[i].first) <= 1e-8 &&
                            expected[i].second == block.observed[i].second;
        }
        out.push_back(block);
    }
    return out;
}

bool spectral_verify(int n) {
    auto blocks = spectral_blocks(n);
    return std::all_of(blocks.begin(), blocks.end(), [](const SpectralBlock &b) {
        return b.matches;
    });
}

ExampleSplitCheck n4_example_check() {
    const int n = 4;
    std::vector<std::pair<int, int>> pairs;
    for (int r = 1; r <= n; r++) {
        for (int s = r + 1; s <= n; s++) {
            pairs.push_back({r, s});
        }
    }
    auto index = [&](int r, int s) {
        if (r > s) {
            std::swap(r, s);
        }
        return (int)(std::find(pairs.begin(), pairs.end(), std::make_pair(r, s)) - pairs.begin());
    };
    using Coeffs = std::vector<double>;
    Coeffs average(pairs.size(), 1.0);
    std::vector<Coeffs> standard;
    for (int r = 2; r <= n; r++) {
        Coeffs c(pairs.size(), 0.0);
        for (int s = 2; s <= n; s++) {
            c[index(1, s)] += 1;
        }
        for (int s = 1; s <= n; s++) {
            if (s != r) {
                c[index(r, s)] -= 1;
            }
        }
        standard.push_back(c);
    }
    // Order of pairs: 12, 13, 14, 23, 24, 34.
    std::vector<Coeffs> printed{{2, -1, -1, -1, -1, 2}, {1, 1, -2, -2, 1, 1}};

    ExampleSplitCheck check{{}, 0, {}, 0, true};
    std::vector<Coeffs> others = standard;
    others.push_back(average);

    auto coefficient_rank = [&](const std::vector<Coeffs> &cs) {
        Eigen::MatrixXd m(pairs.size(), cs.size());
        for (size_t i = 0; i < cs.size(); i++) {
            m.col(i) = Eigen::Map<const Eigen::VectorXd>(cs[i].data(), cs[i].size());
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
        lu.setThreshold(1e-10);
        return (int)lu.rank();
    };
    check.coefficient_ranks = {coefficient_rank({average}), coefficient_rank(standard), coefficient_rank(printed)};
    for (const auto &g : printed) {
        Eigen::Map<const Eigen::VectorXd> gv(g.data(), g.size());
        for (const auto &o : others) {
            Eigen::Map<const Eigen::VectorXd> ov(o.data(), o.size());
            check.coefficient_overlap = std::max(check.coefficient_overlap, std::abs(gv.dot(ov)) / (gv.norm() * ov.norm()));
        }
    }

    DenseState w2 = embed(DickeVector::basis(n, 2));
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
        std::vector<DenseState> images;
        for (auto [r, s] : pairs) {
            images.push_back(apply(ops::pauli_pair(p, r, s), w2));
        }
        auto realize = [&](const Coeffs &c) {
            DenseState v(n);
            for (size_t i = 0; i < c.size(); i++) {
                v = v + images[i].scaled(c[i]);
            }
            return v;
        };
        auto rank_of = [&](const std::vector<Coeffs> &cs) {
            Eigen::MatrixXcd m(1 << n, cs.size());
            for (size_t i = 0; i < cs.size(); i++) {
                DenseState v = realize(cs[i]);
                for (size_t a = 0; a < v.size(); a++) {
                    m(a, i) = v.amps[a];
                }
            }
            if (m.norm() <= 1e-12) {
                return 0;
            }
            Eigen::FullPivLU<Eigen::MatrixXcd> lu(m);
            lu.setThreshold(1e-10);
            return (int)lu.rank();
        };
        check.realized_ranks.push_back({rank_of({average}), rank_of(standard), rank_of(printed)});
        for (const auto &g : printed) {
            DenseState gv = realize(g);
            for (const auto &o : others) {
                DenseState ov = realize(o);
                if (ov.norm() > 1e-12) {
                    check.realized_overlap =
                        std::max(check.realized_overlap, std::abs(gv.inner(ov)) / (gv.norm() * ov.norm()));
                }
            }
        }
    }
    check.passed = check.coefficient_ranks == std::array<int, 3>{1, 3, 2} && check.coefficient_overlap <= 1e-12 &&
                   check.realized_overlap <= 1e-12;
    for (const auto &r : check.realized_ranks) {
        check.passed = check.passed && r == std::array<int, 3>{1, 0, 2};
    }
    return check;
}

}  // namespace picodes

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

#include <gtest/gtest.h>

#include <algorithm>

using namespace picodes;

namespace {

std::vector<long> sorted(std::vector<long> v) {
    std::sort(v.begin(), v.end());
    return v;
}

void expect_table(int n, const std::vector<std::vector<long>> &golden) {
    auto got = decomposition_table(n).dims();
    ASSERT_EQ(got.size(), golden.size());
    for (size_t k = 0; k < golden.size(); k++) {
        ASSERT_EQ(sorted(got[k]), sorted(golden[k])) << "n=" << n << " k=" << k;
    }
}

}  // namespace

TEST(rep_theory, irrep_labels) {
    IrrepLabel a{7, 3};
    ASSERT_EQ(a.dim(), 14);
    ASSERT_EQ(a.partition(), std::make_pair(4, 3));
    ASSERT_EQ(a.partition_text(), "[4,3]");
    ASSERT_EQ(a.spin_text(), "1/2");
    ASSERT_DOUBLE_EQ(a.casimir(), 0.75);
    IrrepLabel b{8, 2};
    ASSERT_EQ(b.spin_text(), "2");
    ASSERT_DOUBLE_EQ(b.casimir(), 6.0);
    ASSERT_EQ((IrrepLabel{9, 0}.dim()), 1);
}

TEST(rep_theory, weight_space_examples) {
    auto d = [](int n, int k) {
        std::vector<long> out;
        for (const auto &l : decompose_weight_space(n, k)) {
            out.push_back(l.dim().convert_to<long>());
        }
        return out;
    };
    ASSERT_EQ(d(7, 3), (std::vector<long>{1, 6, 14, 14}));
    ASSERT_EQ(d(9, 4), (std::vector<long>{1, 8, 27, 48, 42}));
    ASSERT_EQ(d(5, 0), (std::vector<long>{1}));
    ASSERT_THROW(decompose_weight_space(5, 6), std::invalid_argument);
    ASSERT_THROW(decompose_weight_space(5, -1), std::invalid_argument);
}

TEST(rep_theory, dimensions_sum_to_binomial) {
    for (int n = 1; n <= 20; n++) {
        for (int k = 0; k <= n; k++) {
            BigInt total = 0;
            for (const auto &l : decompose_weight_space(n, k)) {
                total += l.dim();
            }
            ASSERT_EQ(total, binomial(n, k)) << n << " " << k;
        }
    }
}

TEST(rep_theory, golden_table_n5) {
    expect_table(5, {{1}, {1, 4}, {1, 4, 5}, {1, 4, 5}, {1, 4}, {1}});
}

TEST(rep_theory, golden_table_n7) {
    expect_table(7, {{1}, {1, 6}, {1, 6, 14}, {1, 6, 14, 14}, {1, 6, 14, 14}, {1, 6, 14}, {1, 6}, {1}});
    std::string text = decomposition_table(7).to_text();
    ASSERT_NE(text.find("W_3 = U_3^1 + U_3^6 + U_3^14 + U_3^14~"), std::string::npos) << text;
}

TEST(rep_theory, golden_table_n9) {
    expect_table(
        9,
        {{1},
         {1, 8},
         {1, 8, 27},
         {1, 8, 27, 48},
         {1, 8, 27, 48, 42},
         {1, 8, 27, 48, 42},
         {1, 8, 27, 48},
         {1, 8, 27},
         {1, 8},
         {1}});
}

TEST(rep_theory, counting_examples) {
    auto mults = [](int n) {
        std::vector<int> out;
        for (const auto &[l, m] : counting_report(n).multiplicities) {
            out.push_back(m);
        }
        return out;
    };
    ASSERT_EQ(mults(7), (std::vector<int>{8, 6, 4, 2}));
    ASSERT_EQ(mults(9), (std::vector<int>{10, 8, 6, 4, 2}));
    ASSERT_EQ(mults(5), (std::vector<int>{6, 4, 2}));
    CountingReport r = counting_report(9);
    ASSERT_EQ(r.multiplicities[2].first.dim(), 27);
    ASSERT_EQ(r.onebit_trivial_used, 4);
    ASSERT_EQ(r.onebit_standard_used, 3);
    ASSERT_NE(r.summary.find("6 x dim 27"), std::string::npos);
}

TEST(rep_theory, double_error_split_examples) {
    DoubleErrorSplit s7 = double_error_split(7);
    ASSERT_EQ(s7.trivial, 1);
    ASSERT_EQ(s7.standard, 6);
    ASSERT_EQ(s7.remainder, 14);
    ASSERT_TRUE(s7.sum_matches_pairs);
    DoubleErrorSplit s9 = double_error_split(9);
    ASSERT_EQ(s9.trivial + s9.standard + s9.remainder, 36);
    ASSERT_EQ(s9.remainder, 27);
    DoubleErrorSplit s4 = double_error_split(4);
    ASSERT_EQ(s4.standard, 3);
    ASSERT_EQ(s4.remainder, 2);
    ASSERT_THROW(double_error_split(3), std::invalid_argument);
}

TEST(rep_theory, spectral_small) {
    for (int n = 1; n <= 7; n++) {
        ASSERT_TRUE(spectral_verify(n)) << n;
    }
    auto blocks = spectral_blocks(5);
    ASSERT_EQ(blocks.size(), 6u);
    ASSERT_EQ(blocks[2].observed.size(), 3u);
    ASSERT_NEAR(blocks[2].observed[0].first, 0.75, 1e-9);
    ASSERT_EQ(blocks[2].observed[0].second, 5);
}

TEST(rep_theory, spectral_n9_weight4) {
    auto blocks = spectral_blocks(9);
    const auto &b = blocks[4];
    ASSERT_TRUE(b.matches);
    std::vector<std::pair<double, int>> want{{0.75, 42}, {3.75, 48}, {8.75, 27}, {15.75, 8}, {24.75, 1}};
    ASSERT_EQ(b.observed.size(), want.size());
    for (size_t i = 0; i < want.size(); i++) {
        ASSERT_NEAR(b.observed[i].first, want[i].first, 1e-8);
        ASSERT_EQ(b.observed[i].second, want[i].second);
    }
    ASSERT_THROW(spectral_blocks(10), std::invalid_argument);
}

TEST(rep_theory, n4_example) {
    ExampleSplitCheck c = n4_example_check();
    ASSERT_EQ(c.coefficient_ranks, (std::array<int, 3>{1, 3, 2}));
    ASSERT_LT(c.coefficient_overlap, 1e-12);
    ASSERT_EQ(c.realized_ranks.size(), 3u);
    for (const auto &r : c.realized_ranks) {
        ASSERT_EQ(r, (std::array<int, 3>{1, 0, 2}));
    }
    ASSERT_LT(c.realized_overlap, 1e-12);
    ASSERT_TRUE(c.passed);
}

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

#include "picodes/combinatorics.h"

#include <gtest/gtest.h>

using namespace picodes;

TEST(combinatorics, binomial_values) {
    ASSERT_EQ(binomial(9, 4), 126);
    ASSERT_EQ(binomial(7, 2), 21);
    ASSERT_EQ(binomial(5, 7), 0);
    ASSERT_EQ(binomial(5, -1), 0);
    ASSERT_EQ(binomial(0, 0), 1);
    ASSERT_EQ(binomial(60, 30), BigInt("118264581564861424"));
    ASSERT_THROW(binomial(-1, 0), std::invalid_argument);
    ASSERT_DOUBLE_EQ(binomial_d(9, 4), 126.0);
}

TEST(combinatorics, binomial_symmetry_and_pascal) {
    for (int n = 0; n <= 30; n++) {
        for (int k = 0; k <= n; k++) {
            ASSERT_EQ(binomial(n, k), binomial(n, n - k)) << n << " " << k;
            if (n > 0) {
                ASSERT_EQ(binomial(n, k), binomial(n - 1, k) + binomial(n - 1, k - 1)) << n << " " << k;
            }
        }
    }
}

TEST(combinatorics, identity_examples) {
    ASSERT_TRUE(check_identity_comb(7, 2, 2));
    ASSERT_TRUE(check_identity_comb(6, 3, 1));
    ASSERT_TRUE(check_identity_comb(9, 0, 1));
}

TEST(combinatorics, identity_exhaustive) {
    for (int N = 0; N <= 30; N++) {
        for (int K = 0; K <= N; K++) {
            for (int J : {1, 2}) {
                ASSERT_TRUE(check_identity_comb(N, K, J)) << N << " " << K << " " << J;
            }
        }
    }
}

TEST(combinatorics, identity_rejects_bad_input) {
    ASSERT_THROW(check_identity_comb(5, 2, 3), std::invalid_argument);
    ASSERT_THROW(check_identity_comb(-1, 0, 1), std::invalid_argument);
}

TEST(combinatorics, gcd_lcm_and_conversion) {
    ASSERT_EQ(big_gcd(12, 18), 6);
    ASSERT_EQ(big_gcd(-12, 18), 6);
    ASSERT_EQ(big_gcd(0, 7), 7);
    ASSERT_EQ(big_lcm(4, 6), 12);
    ASSERT_EQ(big_lcm(0, 6), 0);
    ASSERT_DOUBLE_EQ(to_double(BigRatio(BigInt(-35), BigInt(3))), -35.0 / 3);
}

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

#include <mutex>
#include <stdexcept>
#include <vector>

namespace picodes {

namespace {

// Pascal rows grow on demand; rows are never invalidated once built.
struct PascalCache {
    std::mutex mu;
    std::vector<std::vector<BigInt>> rows{{BigInt(1)}};

    BigInt get(int n, int k) {
        std::lock_guard<std::mutex> lock(mu);
        while ((int)rows.size() <= n) {
            const auto &prev = rows.back();
            std::vector<BigInt> next(prev.size() + 1);
            next.front() = 1;
            next.back() = 1;
            for (size_t j = 1; j + 1 < next.size(); j++) {
                next[j] = prev[j - 1] + prev[j];
            }
            rows.push_back(std::move(next));
        }
        return rows[n][k];
    }
};

PascalCache &pascal_cache() {
    static PascalCache cache;
    return cache;
}

}  // namespace

BigInt binomial(int n, int k) {
    if (n < 0) {
        throw std::invalid_argument("binomial: n must be non-negative");
    }
    if (k < 0 || k > n) {
        return 0;
    }
    return pascal_cache().get(n, k);
}

double binomial_d(int n, int k) {
    return binomial(n, k).convert_to<double>();
}

bool check_identity_comb(int N, int K, int J) {
    if (N < 0 || (J != 1 && J != 2) || N + J == 0) {
        throw std::invalid_argument("check_identity_comb: requires N >= 0, J in {1,2}, N+J != 0");
    }
    BigRatio lhs = BigRatio(binomial(N, K) - binomial(N, K - J));
    BigRatio rhs = BigRatio(BigInt(N - 2 * K + J), BigInt(N + J)) * BigRatio(binomial(N + J, K));
    return lhs == rhs;
}

BigInt big_gcd(const BigInt &a, const BigInt &b) {
    return boost::multiprecision::gcd(a, b);
}

BigInt big_lcm(const BigInt &a, const BigInt &b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    return boost::multiprecision::lcm(a, b);
}

double to_double(const BigRatio &r) {
    return r.convert_to<double>();
}

}  // namespace picodes

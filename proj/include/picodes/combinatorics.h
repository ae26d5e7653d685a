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

#ifndef _PICODES_COMBINATORICS_H
#define _PICODES_COMBINATORICS_H

#include <boost/multiprecision/cpp_int.hpp>

namespace picodes {

using BigInt = boost::multiprecision::cpp_int;
using BigRatio = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k). Zero when k < 0 or k > n.
BigInt binomial(int n, int k);

/// Same as `binomial`, converted to double.
double binomial_d(int n, int k);

/// Exact check of C(N,K) - C(N,K-J) = ((N-2K+J)/(N+J)) C(N+J,K).
/// Throws std::invalid_argument for N < 0, J not in {1,2}, or N + J == 0.
bool check_identity_comb(int N, int K, int J);

/// Greatest common divisor / least common multiple on big integers.
BigInt big_gcd(const BigInt &a, const BigInt &b);
BigInt big_lcm(const BigInt &a, const BigInt &b);

double to_double(const BigRatio &r);

}  // namespace picodes

#endif

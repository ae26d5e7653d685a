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

#ifndef _PICODES_DICKE_STATES_H
#define _PICODES_DICKE_STATES_H

#include <complex>
#include <span>
#include <vector>

#include "picodes/combinatorics.h"

namespace picodes {

using Complex = std::complex<double>;

/// Permutationally invariant state sum_k coeffs[k] W_k, where W_k is the
/// unnormalized sum of all weight-k basis strings (squared norm C(n,k)).
struct DickeVector {
    int n;
    std::vector<Complex> coeffs;

    DickeVector(int n, std::vector<Complex> coeffs);
    static DickeVector zero(int n);
    static DickeVector basis(int n, int k);

    double norm_squared() const;
    double norm() const;
    /// <this, other>, conjugate-linear in the first argument.
    Complex inner(const DickeVector &other) const;
    DickeVector normalized() const;
    DickeVector scaled(Complex factor) const;
    DickeVector operator+(const DickeVector &other) const;
    DickeVector operator-(const DickeVector &other) const;
    /// Coefficient of the normalized basis vector W_k / sqrt(C(n,k)).
    Complex normalized_coeff(int k) const;
};

/// Two-word code (c0, c1) in the weight basis.
struct DickeCode {
    int n;
    DickeVector c0;
    DickeVector c1;
    bool satisfies_I;
    bool satisfies_II;

    /// Builds c0 = sum_m a[m] W_{2m}, c1 = mirror of c0. Requires odd n and
    /// a.size() == (n+1)/2.
    static DickeCode from_even_coefficients(int n, std::span<const Complex> a);
    /// Builds c0 and c1 from arbitrary coefficient vectors; the flags are
    /// detected. Throws std::invalid_argument if the words are not orthogonal.
    static DickeCode from_words(const DickeVector &c0, const DickeVector &c1, double tol = 1e-10);

    DickeCode normalized() const;
    /// c0 coefficients at even weights (a_0, a_2, ..., a_{n-1}).
    std::vector<Complex> even_coefficients() const;
};

/// Average errors acting on the weight basis.
DickeVector apply_avg_Z(const DickeVector &v);
DickeVector apply_avg_X(const DickeVector &v);
DickeVector apply_avg_Y(const DickeVector &v);
DickeVector apply_avg_ZZ(const DickeVector &v);

enum class DifferenceKind { Z, X, iY, X_plus_iY, X_minus_iY };

/// sum_k coeffs[k] V_k(r,s), where V_k(r,s) is the sum over weight-(k+1)
/// strings with bit r set and bit s clear, minus the same with r and s
/// swapped.
struct VExpansion {
    int n;
    int r;
    int s;
    std::vector<Complex> coeffs;

    VExpansion(int n, int r, int s, std::vector<Complex> coeffs);
};

/// Action of (P_r - P_s) on v. iY means i (Y_r - Y_s). The combined kinds are
/// (X_r - X_s) +- i (Y_r - Y_s).
VExpansion difference_action(DifferenceKind which, const DickeVector &v, int r, int s);

/// Inner product of two V-expansions using the closed forms for equal pairs,
/// pairs sharing one index, and disjoint pairs.
Complex v_inner_product(const VExpansion &e1, const VExpansion &e2);

/// <Z_1 V_k(1,s), V_k(1,t)> for distinct s, t in 2..n.
BigRatio z1_weighted_inner(int k, int n);

}  // namespace picodes

#endif

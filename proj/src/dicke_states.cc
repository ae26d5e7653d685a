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

#include "picodes/dicke_states.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace picodes {

DickeVector::DickeVector(int n, std::vector<Complex> coeffs) : n(n), coeffs(std::move(coeffs)) {
    if (n < 1) {
        throw std::invalid_argument("DickeVector: n must be positive");
    }
    if ((int)this->coeffs.size() != n + 1) {
        throw std::invalid_argument(
            "DickeVector: expected " + std::to_string(n + 1) + " coefficients, got " +
            std::to_string(this->coeffs.size()));
    }
}

DickeVector DickeVector::zero(int n) {
    return DickeVector(n, std::vector<Complex>(n + 1, 0.0));
}

DickeVector DickeVector::basis(int n, int k) {
    if (k < 0 || k > n) {
        throw std::out_of_range("DickeVector::basis: weight out of range");
    }
    DickeVector v = zero(n);
    v.coeffs[k] = 1.0;
    return v;
}

double DickeVector::norm_squared() const {
    double t = 0;
    for (int k = 0; k <= n; k++) {
        t += std::norm(coeffs[k]) * binomial_d(n, k);
    }
    return t;
}

double DickeVector::norm() const {
    return std::sqrt(norm_squared());
}

Complex DickeVector::inner(const DickeVector &other) const {
    if (other.n != n) {
        throw std::invalid_argument("DickeVector::inner: qubit count mismatch");
    }
    Complex t = 0;
    for (int k = 0; k <= n; k++) {
        t += std::conj(coeffs[k]) * other.coeffs[k] * binomial_d(n, k);
    }
    return t;
}

DickeVector DickeVector::normalized() const {
    double m = norm();
    if (m == 0) {
        throw std::domain_error("DickeVector::normalized: zero vector");
    }
    return scaled(1.0 / m);
}

DickeVector DickeVector::scaled(Complex factor) const {
    DickeVector out = *this;
    for (auto &c : out.coeffs) {
        c *= factor;
    }
    return out;
}

DickeVector DickeVector::operator+(const DickeVector &other) const {
    if (other.n != n) {
        throw std::invalid_argument("DickeVector: qubit count mismatch");
    }
    DickeVector out = *this;
    for (int k = 0; k <= n; k++) {
        out.coeffs[k] += other.coeffs[k];
    }
    return out;
}

DickeVector DickeVector::operator-(const DickeVector &other) const {
    return *this + other.scaled(-1.0);
}

Complex DickeVector::normalized_coeff(int k) const {
    return coeffs[k] * std::sqrt(binomial_d(n, k));
}

DickeCode DickeCode::from_even_coefficients(int n, std::span<const Complex> a) {
    if (n < 1 || n % 2 == 0) {
        throw std::invalid_argument("DickeCode: n must be odd and positive");
    }
    if ((int)a.size() != (n + 1) / 2) {
        throw std::invalid_argument(
            "DickeCode: expected " + std::to_string((n + 1) / 2) + " even-weight coefficients");
    }
    DickeVector c0 = DickeVector::zero(n);
    DickeVector c1 = DickeVector::zero(n);
    for (size_t m = 0; m < a.size(); m++) {
        c0.coeffs[2 * m] = a[m];
        c1.coeffs[n - 2 * m] = a[m];
    }
    return DickeCode{n, c0, c1, true, true};
}

DickeCode DickeCode::from_words(const DickeVector &c0, const DickeVector &c1, double tol) {
    if (c0.n != c1.n) {
        throw std::invalid_argument("DickeCode: words have different qubit counts");
    }
    int n = c0.n;
    if (n % 2 == 0) {
        throw std::invalid_argument("DickeCode: n must be odd");
    }
    double n0 = c0.norm();
    double n1 = c1.norm();
    if (n0 == 0 || n1 == 0) {
        throw std::invalid_argument("DickeCode: zero code word");
    }
    if (std::abs(c0.inner(c1)) > tol * n0 * n1) {
        throw std::invalid_argument("DickeCode: code words are not orthogonal");
    }
    double scale = std::max(n0, n1);
    bool mirror = true;
    bool parity = true;
    for (int k = 0; k <= n; k++) {
        if (std::abs(c1.coeffs[k] - c0.coeffs[n - k]) > tol * scale) {
            mirror = false;
        }
        if (k % 2 == 1 && std::abs(c0.coeffs[k]) > tol * n0) {
            parity = false;
        }
        if (k % 2 == 0 && std::abs(c1.coeffs[k]) > tol * n1) {
            parity = false;
        }
    }
    return DickeCode{n, c0, c1, mirror, parity};
}

DickeCode DickeCode::normalized() const {
    DickeCode out = *this;
    out.c0 = c0.normalized();
    out.c1 = c1.normalized();
    return out;
}

std::vector<Complex> DickeCode::even_coefficients() const {
    std::vector<Complex> a;
    for (int k = 0; k <= n; k += 2) {
        a.push_back(c0.coeffs[k]);
    }
    return a;
}

DickeVector apply_avg_Z(const DickeVector &v) {
    DickeVector out = v;
    for (int k = 0; k <= v.n; k++) {
        out.coeffs[k] *= double(v.n - 2 * k) / v.n;
    }
    return out;
}

namespace {

// n X W_k = (k+1) W_{k+1} + (n-k+1) W_{k-1}; the lowering part carries `lower_sign`.
DickeVector raise_lower(const DickeVector &v, Complex raise_factor, Complex lower_factor) {
    int n = v.n;
    DickeVector out = DickeVector::zero(n);
    for (int k = 0; k <= n; k++) {
        if (k + 1 <= n) {
            out.coeffs[k + 1] += raise_factor * double(k + 1) / double(n) * v.coeffs[k];
        }
        if (k - 1 >= 0) {
            out.coeffs[k - 1] += lower_factor * double(n - k + 1) / double(n) * v.coeffs[k];
        }
    }
    return out;
}

}  // namespace

DickeVector apply_avg_X(const DickeVector &v) {
    return raise_lower(v, 1.0, 1.0);
}

DickeVector apply_avg_Y(const DickeVector &v) {
    const Complex i(0, 1);
    return raise_lower(v, -i, i);
}

DickeVector apply_avg_ZZ(const DickeVector &v) {
    int n = v.n;
    if (n < 2) {
        throw std::invalid_argument("apply_avg_ZZ: requires n >= 2");
    }
    DickeVector out = v;
    for (int k = 0; k <= n; k++) {
        double m = n - 2 * k;
        out.coeffs[k] *= (m * m - n) / (double(n) * (n - 1));
    }
    return out;
}

VExpansion::VExpansion(int n, int r, int s, std::vector<Complex> coeffs)
    : n(n), r(r), s(s), coeffs(std::move(coeffs)) {
    if (n < 2) {
        throw std::invalid_argument("VExpansion: requires n >= 2");
    }
    if (r < 1 || r > n || s < 1 || s > n) {
        throw std::out_of_range("VExpansion: qubit index out of range");
    }
    if (r == s) {
        throw std::invalid_argument("VExpansion: requires r != s");
    }
    if ((int)this->coeffs.size() != n - 1) {
        throw std::invalid_argument("VExpansion: expected n-1 coefficients");
    }
}

VExpansion difference_action(DifferenceKind which, const DickeVector &v, int r, int s) {
    int n = v.n;
    if (r == s) {
        throw std::invalid_argument("difference_action: requires r != s");
    }
    auto c = [&](int k) -> Complex {
        return k >= 0 && k <= n ? v.coeffs[k] : Complex(0);
    };
    std::vector<Complex> e(n - 1);
    for (int j = 0; j <= n - 2; j++) {
        switch (which) {
            case DifferenceKind::Z:
                e[j] = -2.0 * c(j + 1);
                break;
            case DifferenceKind::X:
                e[j] = c(j) - c(j + 2);
                break;
            case DifferenceKind::iY:
                e[j] = c(j) + c(j + 2);
                break;
            case DifferenceKind::X_plus_iY:
                e[j] = 2.0 * c(j);
                break;
            case DifferenceKind::X_minus_iY:
                e[j] = -2.0 * c(j + 2);
                break;
        }
    }
    return VExpansion(n, r, s, std::move(e));
}

namespace {

// <V_k(r,s), V_k(q,t)> in units of C(n-2,k).
int pair_overlap(int r, int s, int q, int t) {
    if (r == q && s == t) {
        return 2;
    }
    if (r == t && s == q) {
        return -2;
    }
    if (r == q || s == t) {
        return 1;
    }
    if (r == t || s == q) {
        return -1;
    }
    return 0;
}

}  // namespace

Complex v_inner_product(const VExpansion &e1, const VExpansion &e2) {
    if (e1.n != e2.n) {
        throw std::invalid_argument("v_inner_product: qubit count mismatch");
    }
    int factor = pair_overlap(e1.r, e1.s, e2.r, e2.s);
    if (factor == 0) {
        return 0;
    }
    Complex t = 0;
    for (int k = 0; k <= e1.n - 2; k++) {
        t += std::conj(e1.coeffs[k]) * e2.coeffs[k] * binomial_d(e1.n - 2, k);
    }
    return t * double(factor);
}

BigRatio z1_weighted_inner(int k, int n) {
    if (n < 3 || k < 0 || k > n - 2) {
        throw std::invalid_argument("z1_weighted_inner: requires n >= 3 and 0 <= k <= n-2");
    }
    return BigRatio(BigInt(2 * k + 2 - n), BigInt(n - 2)) * BigRatio(binomial(n - 2, k));
}

}  // namespace picodes

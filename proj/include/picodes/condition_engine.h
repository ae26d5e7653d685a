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

#ifndef _PICODES_CONDITION_ENGINE_H
#define _PICODES_CONDITION_ENGINE_H

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "picodes/dicke_states.h"

namespace picodes {

constexpr double ENGINE_DEFAULT_TOL = 1e-9;

/// Which part of the bilinear sum an equation constrains.
enum class Part { complex_value, real_part, imag_part };

/// weight * conj(a_i) * a_j, with i, j full weight indices.
struct BilinearTerm {
    int i;
    int j;
    BigRatio weight;
};

/// A named homogeneous quadratic functional, stored as an exact coefficient
/// table with a cached floating-point copy for evaluation.
class Equation {
   public:
    Equation(std::string name, Part part, std::vector<BilinearTerm> terms);

    const std::string &name() const {
        return name_;
    }
    Part part() const {
        return part_;
    }
    const std::vector<BilinearTerm> &terms() const {
        return terms_;
    }

    /// Evaluates on full weight coefficients (length n+1).
    Complex evaluate(std::span<const Complex> full) const;

    /// Merges like terms, folds (i,j)/(j,i) pairs for real and imaginary
    /// parts (i <= j), drops zeros, and sorts.
    Equation canonical() const;
    /// Canonical form divided by its rational content, leading term positive.
    Equation primitive() const;
    /// Removes terms touching odd weights.
    Equation restricted_to_even() const;
    Equation scaled(const BigRatio &factor) const;
    Equation renamed(std::string name) const;
    Equation with_part(Part part) const;

    /// Exact coefficient of the canonical monomial (i, j).
    BigRatio coefficient(int i, int j) const;
    /// True iff the canonical forms agree up to one nonzero rational factor
    /// (written to `scale` as this = scale * other).
    bool proportional_to(const Equation &other, BigRatio *scale = nullptr) const;
    std::string to_string() const;

   private:
    std::string name_;
    Part part_;
    std::vector<BilinearTerm> terms_;
    std::vector<double> weights_;
};

/// a * e1 + b * e2 (both must constrain the same part).
Equation combine(std::string name, const BigRatio &a, const Equation &e1, const BigRatio &b, const Equation &e2);
/// Primitive combination of e1, e2 with the canonical monomial (i, j) removed.
Equation eliminate(std::string name, const Equation &e1, const Equation &e2, int i, int j);

struct ConditionResidual {
    std::string system;
    std::vector<std::string> names;
    std::vector<Complex> raw;
    /// |raw| / sum_k |a_k|^2 C(n,k).
    std::vector<double> scale_free;
    double max_abs = 0;
    double max_scale_free = 0;
    double norm = 0;

    bool passes(double tol = ENGINE_DEFAULT_TOL) const {
        return max_scale_free <= tol;
    }
    /// Residual by equation name; throws std::out_of_range if absent.
    Complex value(const std::string &name) const;
    double scale_free_value(const std::string &name) const;
};

struct ConditionSystem {
    std::string name;
    int n;
    std::vector<Equation> equations;

    /// Evaluates on even-weight coefficients (a_0, a_2, ..., a_{n-1}).
    ConditionResidual evaluate(std::span<const Complex> even_coeffs) const;
    ConditionResidual evaluate_full(std::span<const Complex> full) const;
    const Equation &equation(const std::string &name) const;
    ConditionSystem subset(std::string name, const std::vector<std::string> &keep) const;
};

/// Full weight vector from even-weight coefficients.
std::vector<Complex> expand_even(int n, std::span<const Complex> even_coeffs);

/// Raw averaged-error forms <f c0, (avgX +- i avgY) c1> for f = I, avgZ, avgZZ,
/// named sum1a, sum2a, XYp.ZZ, diff1a, diff2a, XYm.ZZ (common scale n^2/2,
/// n^2 (n-1)/2 for the ZZ forms is absorbed; see implementation).
std::vector<Equation> averaged_block_forms(int n);

ConditionSystem theorem1_system(int n);
ConditionSystem appendixC_system(int n);
ConditionSystem phase_double_system(int n);
ConditionSystem nine_bit_double_system_def();
/// Conditions for {I, X_k, Z_k, Z_j Z_k}: no Y_k errors.
ConditionSystem xz_double_system(int n);

ConditionResidual theorem1_residuals(int n, std::span<const double> a);
ConditionResidual appendixC_residuals(int n, std::span<const Complex> a);
ConditionResidual phase_double_residuals(int n, std::span<const Complex> a);
ConditionResidual nine_bit_double_system(std::span<const Complex> a);

/// Integer-coefficient polynomial in the real even-weight coefficients.
struct Polynomial {
    std::string name;
    std::map<std::pair<int, int>, BigInt> coeffs;
    std::string to_string() const;
    /// True iff the two agree up to one nonzero rational factor.
    bool proportional_to(const Polynomial &other) const;
};

std::vector<Polynomial> specialize_theorem1(int n);
Polynomial polynomial_from(const Equation &eq);

struct BlockRedundancy {
    /// sum_m |a_{2m}|^2 ((4m-n)/(n-2)) C(n-2, 2m-1), scale-free.
    double block_value;
    /// Whether the exact identity block * 4n(n-1)(n-2) = ZandZZ - (n^2-n) Z1Z2 holds.
    bool identity_holds;
    bool redundant;
};

/// The double-phase block equation and its exact reduction to the averaged ones.
Equation double_phase_block_equation(int n);
BlockRedundancy block_redundancy_check(int n, std::span<const Complex> a, double tol = 1e-10);

/// For a satisfying the dbp group: nu with conj(a2) a8 = -i nu, checked real
/// and consistent with conj(a4) a6 = (3/7) i nu. Nothing otherwise.
std::optional<Complex> dbp_equivalence(std::span<const Complex> a, double tol = ENGINE_DEFAULT_TOL);

}  // namespace picodes

#endif

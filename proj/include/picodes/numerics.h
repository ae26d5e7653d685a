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

#ifndef _PICODES_NUMERICS_H
#define _PICODES_NUMERICS_H

#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/mpfr.hpp>

#include "picodes/condition_engine.h"

namespace picodes {

using HighFloat = boost::multiprecision::mpfr_float;

constexpr int DEFAULT_PRECISION_DIGITS = 50;

/// Sets the default mpfr precision (decimal digits) for the current thread
/// and restores the previous value on destruction.
class PrecisionScope {
   public:
    explicit PrecisionScope(int digits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope &) = delete;
    PrecisionScope &operator=(const PrecisionScope &) = delete;

   private:
    unsigned previous_;
};

HighFloat to_high(const BigRatio &r);
/// Decimal rendering with the requested number of significant digits.
std::string high_to_string(const HighFloat &x, int digits);

/// Polynomial with rational coefficients, lowest degree first.
struct RationalPolynomial {
    std::vector<BigRatio> coeffs;
    HighFloat operator()(const HighFloat &x) const;
    HighFloat derivative(const HighFloat &x) const;
    double operator()(double x) const;
    std::string to_string(const std::string &var = "x") const;
};

/// Root of p inside [lo, hi] (a sign change is required), polished by
/// safeguarded Newton iteration to `digits` decimal digits.
HighFloat polish_root(const RationalPolynomial &p, const HighFloat &lo, const HighFloat &hi, int digits);

/// Which real parameter of the even-weight coefficient vector is free.
struct Unknown {
    int index;  // even-coefficient index m (weight 2m)
    bool imag;
};

/// Newton iteration at `digits` precision on a square real system built from
/// `equations` (complex-valued equations contribute two rows). `start` holds
/// even-weight coefficients as (re, im) decimal strings.
std::vector<std::pair<HighFloat, HighFloat>> polish_condition_system(
    const ConditionSystem &system,
    const std::vector<std::pair<HighFloat, HighFloat>> &start,
    const std::vector<Unknown> &unknowns,
    int digits);

/// Real residual vector of a system at high precision (complex equations
/// split into real and imaginary rows).
std::vector<HighFloat> high_residuals(
    const ConditionSystem &system, const std::vector<std::pair<HighFloat, HighFloat>> &even_coeffs);

struct LeastSquaresResult {
    Eigen::VectorXd x;
    double residual_norm;
    int iterations;
    bool converged;
};

/// Levenberg-Marquardt with a forward-difference Jacobian; works for any
/// number of residuals relative to unknowns.
LeastSquaresResult solve_least_squares(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd &)> &residual,
    Eigen::VectorXd x0,
    int max_iterations = 200,
    double tol = 1e-14);

}  // namespace picodes

#endif

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

#ifndef _PICODES_CODE_WORKSHOP_H
#define _PICODES_CODE_WORKSHOP_H

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "picodes/condition_engine.h"
#include "picodes/kl_checker.h"
#include "picodes/numerics.h"

namespace picodes {

struct CatalogEntry {
    std::string id;
    /// Gauge-fixed (unnormalized) code with conditions I and II.
    DickeCode code;
    std::vector<std::string> claimed_correctable;
    std::string provenance;
    /// Even-weight coefficients as high-precision decimal strings.
    std::vector<std::string> exact_re;
    std::vector<std::string> exact_im;
    /// Optional closed forms for the even-weight coefficients ("" when none).
    std::vector<std::string> symbolic;
    /// Defining relation and its residual at catalog precision.
    std::string defining_relation;
    double defining_residual = 0;
};

class CatalogError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Builds and self-validates every entry (each claimed error set must pass
/// the full-space oracle). Throws CatalogError naming the failing entry.
std::vector<CatalogEntry> build_catalog(int digits = DEFAULT_PRECISION_DIGITS);
/// Cached catalog at the default precision.
const std::vector<CatalogEntry> &catalog();
/// Throws std::out_of_range for unknown ids.
const CatalogEntry &catalog_entry(const std::string &id);

struct ClaimCheck {
    std::string entry;
    std::string error_set;
    bool passed;
    double max_B;
    double max_D_gap;
};
std::vector<ClaimCheck> validate_catalog(const std::vector<CatalogEntry> &entries, double tol = KL_DEFAULT_TOL);

/// Defining polynomials of the irrational n = 9 entries.
RationalPolynomial nine_a6zero_quadratic();
/// Cubic for a6^2 = t on the a0 = 0 branch, derived from the one-bit equations.
RationalPolynomial nine_a0zero_cubic();
/// The quoted cubic with t^2 coefficient 2*28^2/5 (does not yield a code).
RationalPolynomial nine_a0zero_printed_cubic();
HighFloat positive_root(const RationalPolynomial &p, int digits = DEFAULT_PRECISION_DIGITS);

/// Real one-bit family for n = 9 with a4 = t, a8 = 1: x = a6^2 solves
/// 5488 t^2 x^2 + 4(-490 t^3 + 35 t^2 - 1) x + (175 t^4 + 2 t^2 - 1) = 0.
/// Returns (a0, a2, a4, a6, a8) for every positive root and both signs of
/// a6; empty when there is no positive root. Throws std::logic_error if a
/// produced vector fails the one-bit equations.
std::vector<std::vector<double>> solve_nine_family(double t, int digits = DEFAULT_PRECISION_DIGITS);
/// Coefficients (x^2, x, 1) of the quadratic in x for a given t.
std::array<double, 3> nine_family_quadratic(double t);
/// Discriminant of that quadratic divided by 16, as a polynomial in t:
/// 1 + 1302 t^2 + 980 t^3 - 1519 t^4 - 34300 t^5.
RationalPolynomial nine_family_discriminant();
/// Its only real root (about 0.3497); for 0 < t < limit the quadratic has a
/// positive root, beyond it none.
HighFloat nine_family_t_limit(int digits = DEFAULT_PRECISION_DIGITS);

struct NineBitFamilyPoint {
    double x;
    double y;
    int branch_sign;
    std::vector<Complex> a;
    double nu;
};

/// Family point satisfying the dbp and dbm groups. Throws
/// std::invalid_argument for x <= 0 or |sign| != 1.
NineBitFamilyPoint nine_family_point(double x, double y, int sign);
/// Same without the residual verification (for scans).
NineBitFamilyPoint nine_family_point_unchecked(double x, double y, int sign);
/// (35/3)|a4|^2 + 21 x + 15 + (35/(3 nu^2))|a4|^2.
double nogo_bracket(const NineBitFamilyPoint &p);

struct BracketReport {
    int samples;
    double min_bracket;
    /// Largest relative gap between ImXY and nu * bracket.
    double max_consistency_error;
};
BracketReport nogo_bracket_positivity(int samples, uint64_t seed = 1);

struct ScanSpec {
    int nx = 201;
    int ny = 201;
    double x_min = 1e-3;
    double x_max = 1e3;
    double y_abs_min = 1e-3;
    double y_abs_max = 1e3;
    bool y_axis_only = false;
    std::vector<std::string> equations{"dZZa", "dbIZZ"};
    int refine_iterations = 60;
    bool keep_table = false;
};

struct ScanRow {
    double x;
    double y;
    double residual;
};

struct ScanResult {
    /// Minimum over the family of the sum of squared scale-free residuals.
    double min_residual;
    double argmin_x;
    double argmin_y;
    double grid_min;
    long evaluated_points;
    std::vector<std::string> equations;
    std::vector<double> residuals_at_min;
    std::vector<ScanRow> table;
};

ScanResult nogo_residual_scan(const ScanSpec &spec);
double family_objective(double x, double y, const std::vector<std::string> &equations);

struct DropYReport {
    int starts;
    int converged;
    double best_residual;
    std::vector<Complex> best;
    bool oracle_pass;
    double oracle_max_violation;
};

/// Direct multistart solve of the conditions for {I, X_k, Z_k, Z_j Z_k}
/// at n = 9 (a8 = 1), with the best point checked by the oracle.
DropYReport drop_y_search(int starts, uint64_t seed = 1);

struct MultistartReport {
    int starts;
    int converged;
    double best_residual;
    std::vector<Complex> best;
};

/// Direct multistart on the n = 9 double-error system without ImXY, all
/// five coefficients free (unit weight-basis norm).
MultistartReport drop_imxy_search(int starts, uint64_t seed = 1);

/// High-precision solution of the {I, X_k, Z_k, Z_j Z_k} conditions with
/// a8 = 1 and a6 real.
std::vector<std::pair<HighFloat, HighFloat>> nine_xz_zz_solution(int digits = DEFAULT_PRECISION_DIGITS);

struct ProofTrace {
    std::vector<std::string> steps;
    std::string verdict;
    /// True when every step of the argument checked out.
    bool established;
};

/// Case split of the n = 5 one-bit equations over the reals.
ProofTrace five_bit_nonexistence();
/// Which n = 5 equations a candidate (a0, a2, a4) violates.
ProofTrace five_bit_check_candidate(const std::vector<double> &a);

struct SamplingReport {
    int samples;
    double min_scale_free;
    int near_solutions;
};

/// Random real triples with norm >= 1e-3: count of max scale-free residual <= 1e-6.
SamplingReport five_bit_sampling(int samples, uint64_t seed = 1);

/// Complex n = 7 uniqueness chain plus random and least-squares corroboration.
ProofTrace seven_bit_complex_uniqueness(int samples = 100000, uint64_t seed = 1);

/// Random least-squares search for nonnegative (|a0|^2, |a2|^2, |a4|^2)
/// solving the n = 5 phase equations; returns each converged solution
/// normalized to unit length.
std::vector<std::array<double, 3>> phase5_solutions(int starts, uint64_t seed = 1);

/// Solves a real homogeneous quadratic system by the rules
/// "single monomial => branch on a factor" and "definite sum of squares =>
/// all zero". Returns the trace; verdict reports whether every branch closed.
ProofTrace case_split_real(const std::vector<Polynomial> &system);

}  // namespace picodes

#endif

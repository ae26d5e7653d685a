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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "picodes/code_workshop.h"

namespace picodes {

namespace {

const std::vector<std::string> FAMILY_GROUP{"dbp.a", "dbp.b", "dbp.c", "eqa6alt.a", "eqa6alt.b", "dbm.alt.c"};

void check_family_args(double x, int sign) {
    if (!(x > 0)) {
        throw std::invalid_argument("family point requires x > 0");
    }
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("family branch sign must be +1 or -1");
    }
}

double objective_at(const NineBitFamilyPoint &p, const std::vector<std::string> &equations) {
    ConditionResidual r = nine_bit_double_system(p.a);
    double total = 0;
    for (const auto &name : equations) {
        double v = r.scale_free_value(name);
        total += v * v;
    }
    return total;
}

}  // namespace

NineBitFamilyPoint nine_family_point_unchecked(double x, double y, int sign) {
    check_family_args(x, sign);
    const Complex i(0, 1);
    double s = x * x + y * y;
    double root35 = std::sqrt(35.0);
    double rx = std::sqrt(x);
    Complex a4(-x, y);
    NineBitFamilyPoint p;
    p.x = x;
    p.y = y;
    p.branch_sign = sign;
    p.nu = sign * root35 / 3 * s / rx;
    p.a = {
        35.0 / 3 * Complex(1, 2 * y / x) * s,
        double(sign) * i * root35 / 3.0 * s / rx,
        a4,
        double(sign) * i * root35 / 7.0 * a4 / rx,
        1.0,
    };
    return p;
}

NineBitFamilyPoint nine_family_point(double x, double y, int sign) {
    NineBitFamilyPoint p = nine_family_point_unchecked(x, y, sign);
    ConditionResidual r = nine_bit_double_system(p.a);
    for (const auto &name : FAMILY_GROUP) {
        if (r.scale_free_value(name) > 1e-9) {
            throw std::logic_error("family point violates " + name);
        }
    }
    return p;
}

double nogo_bracket(const NineBitFamilyPoint &p) {
    double s = std::norm(p.a[2]);
    return 35.0 / 3 * s + 21 * p.x + 15 + 35 * s / (3 * p.nu * p.nu);
}

BracketReport nogo_bracket_positivity(int samples, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> log_mag(-3, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    BracketReport rep{samples, std::numeric_limits<double>::infinity(), 0};
    for (int k = 0; k < samples; k++) {
        double x = std::pow(10.0, log_mag(rng));
        double y = (coin(rng) ? 1 : -1) * std::pow(10.0, log_mag(rng));
        int sign = coin(rng) ? 1 : -1;
        NineBitFamilyPoint p = nine_family_point_unchecked(x, y, sign);
        double bracket = nogo_bracket(p);
        rep.min_bracket = std::min(rep.min_bracket, bracket);
        Complex imxy = nine_bit_double_system(p.a).value("ImXY");
        double predicted = p.nu * bracket;
        rep.max_consistency_error =
            std::max(rep.max_consistency_error, std::abs(imxy - predicted) / std::abs(predicted));
    }
    return rep;
}

double family_objective(double x, double y, const std::vector<std::string> &equations) {
    return std::min(
        objective_at(nine_family_point_unchecked(x, y, 1), equations),
        objective_at(nine_family_point_unchecked(x, y, -1), equations));
}

ScanResult nogo_residual_scan(const ScanSpec &spec) {
    if (spec.nx < 2 || spec.ny < 1 || !(spec.x_min > 0) || !(spec.x_max > spec.x_min)) {
        throw std::invalid_argument("scan grid needs nx >= 2, ny >= 1 and 0 < x_min < x_max");
    }
    ScanResult res;
    res.equations = spec.equations;
    res.evaluated_points = 0;
    res.grid_min = std::numeric_limits<double>::infinity();

    const double lx0 = std::log10(spec.x_min);
    const double dlx = (std::log10(spec.x_max) - lx0) / (spec.nx - 1);
    std::vector<double> ys{0.0};
    if (!spec.y_axis_only && spec.ny > 1) {
        int half = (spec.ny - 1) / 2;
        double ly0 = std::log10(spec.y_abs_min);
        double dly = half > 1 ? (std::log10(spec.y_abs_max) - ly0) / (half - 1) : 0;
        for (int j = 0; j < half; j++) {
            double m = std::pow(10.0, ly0 + j * dly);
            ys.push_back(m);
            ys.push_back(-m);
        }
        std::sort(ys.begin(), ys.end());
    }

    double best_lx = lx0, best_y = 0;
    for (int ix = 0; ix < spec.nx; ix++) {
        double lx = lx0 + ix * dlx;
        double x = std::pow(10.0, lx);
        for (double y : ys) {
            double v = family_objective(x, y, spec.equations);
            res.evaluated_points++;
            if (spec.keep_table) {
                res.table.push_back({x, y, v});
            }
            if (v < res.grid_min) {
                res.grid_min = v;
                best_lx = lx;
                best_y = y;
            }
        }
    }

    // Pattern search in (log10 x, y) from the best grid point.
    double best = res.grid_min;
    double hx = dlx;
    double hy = std::max(std::abs(best_y), spec.y_abs_min);
    for (int it = 0; it < spec.refine_iterations; it++) {
        bool moved = false;
        for (int dx = -1; dx <= 1; dx++) {
            for (int dy = -1; dy <= 1; dy++) {
                if (dx == 0 && dy == 0) {
                    continue;
                }
                if (spec.y_axis_only && dy != 0) {
                    continue;
                }
                double lx = best_lx + dx * hx;
                double y = best_y + dy * hy;
                double v = family_objective(std::pow(10.0, lx), y, spec.equations);
                res.evaluated_points++;
                if (v < best) {
                    best = v;
                    best_lx = lx;
                    best_y = y;
                    moved = true;
                }
            }
        }
        if (!moved) {
            hx /= 2;
            hy /= 2;
        }
    }
    res.min_residual = best;
    res.argmin_x = std::pow(10.0, best_lx);
    res.argmin_y = best_y;
    NineBitFamilyPoint p = nine_family_point_unchecked(res.argmin_x, res.argmin_y, 1);
    if (objective_at(nine_family_point_unchecked(res.argmin_x, res.argmin_y, -1), spec.equations) <
        objective_at(p, spec.equations)) {
        p = nine_family_point_unchecked(res.argmin_x, res.argmin_y, -1);
    }
    ConditionResidual r = nine_bit_double_system(p.a);
    for (const auto &name : spec.equations) {
        res.residuals_at_min.push_back(r.scale_free_value(name));
    }
    return res;
}

DropYReport drop_y_search(int starts, uint64_t seed) {
    const ConditionSystem sys = xz_double_system(9);
    auto unpack = [](const Eigen::VectorXd &v) {
        std::vector<Complex> a(5);
        for (int m = 0; m < 4; m++) {
            a[m] = Complex(v[2 * m], v[2 * m + 1]);
        }
        a[4] = 1.0;
        return a;
    };
    auto residual = [&](const Eigen::VectorXd &v) {
        ConditionResidual r = sys.evaluate(unpack(v));
        double norm = r.max_abs > 0 ? r.max_abs / r.max_scale_free : 1.0;
        Eigen::VectorXd out(2 * r.raw.size());
        for (size_t k = 0; k < r.raw.size(); k++) {
            out[2 * k] = r.raw[k].real() / norm;
            out[2 * k + 1] = r.raw[k].imag() / norm;
        }
        return out;
    };

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0, 1);
    DropYReport rep{starts, 0, std::numeric_limits<double>::infinity(), {}, false, 0};
    for (int s = 0; s < starts; s++) {
        Eigen::VectorXd x0(8);
        for (int k = 0; k < 8; k++) {
            x0[k] = gauss(rng);
        }
        LeastSquaresResult lr = solve_least_squares(residual, x0, 400, 1e-13);
        double sf = sys.evaluate(unpack(lr.x)).max_scale_free;
        if (sf <= 1e-10) {
            rep.converged++;
        }
        if (sf < rep.best_residual) {
            rep.best_residual = sf;
            rep.best = unpack(lr.x);
        }
    }
    if (!rep.best.empty()) {
        DickeCode code = DickeCode::from_even_coefficients(9, rep.best);
        KLReport kl = kl_matrices(code, named_error_set("xz-zz", 9));
        rep.oracle_pass = kl.correctable;
        rep.oracle_max_violation = std::max(kl.max_B(), kl.max_D_gap());
    }
    return rep;
}

MultistartReport drop_imxy_search(int starts, uint64_t seed) {
    const ConditionSystem sys = nine_bit_double_system_def().subset(
        "drop-ImXY", {"dbp.a", "dbp.b", "dbp.c", "eqa6alt.a", "eqa6alt.b", "dbm.alt.c", "dZZa", "dbIZZ"});
    auto unpack = [](const Eigen::VectorXd &v) {
        std::vector<Complex> a(5);
        for (int m = 0; m < 5; m++) {
            a[m] = Complex(v[2 * m], v[2 * m + 1]);
        }
        return a;
    };
    auto residual = [&](const Eigen::VectorXd &v) {
        std::vector<Complex> a = unpack(v);
        double norm = 0;
        for (int m = 0; m < 5; m++) {
            norm += std::norm(a[m]) * binomial_d(9, 2 * m);
        }
        ConditionResidual r = sys.evaluate(a);
        Eigen::VectorXd out(2 * r.raw.size() + 1);
        for (size_t k = 0; k < r.raw.size(); k++) {
            out[2 * k] = r.raw[k].real();
            out[2 * k + 1] = r.raw[k].imag();
        }
        out[2 * r.raw.size()] = norm - 1;
        return out;
    };
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0, 1);
    MultistartReport rep{starts, 0, std::numeric_limits<double>::infinity(), {}};
    for (int s = 0; s < starts; s++) {
        Eigen::VectorXd x0(10);
        for (int m = 0; m < 5; m++) {
            double w = 1 / std::sqrt(5 * binomial_d(9, 2 * m));
            x0[2 * m] = w * gauss(rng);
            x0[2 * m + 1] = w * gauss(rng);
        }
        LeastSquaresResult lr = solve_least_squares(residual, x0, 400, 1e-13);
        double sf = sys.evaluate(unpack(lr.x)).max_scale_free;
        if (sf <= 1e-10) {
            rep.converged++;
        }
        if (sf < rep.best_residual) {
            rep.best_residual = sf;
            rep.best = unpack(lr.x);
        }
    }
    return rep;
}

}  // namespace picodes

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

#include "picodes/numerics.h"

#include <sstream>
#include <stdexcept>

#include <boost/math/tools/roots.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace picodes {

PrecisionScope::PrecisionScope(int digits) : previous_(HighFloat::default_precision()) {
    if (digits < 10) {
        throw std::invalid_argument("precision must be at least 10 decimal digits");
    }
    HighFloat::default_precision(digits + 10);
}

PrecisionScope::~PrecisionScope() {
    HighFloat::default_precision(previous_);
}

HighFloat to_high(const BigRatio &r) {
    return HighFloat(numerator(r).str()) / HighFloat(denominator(r).str());
}

std::string high_to_string(const HighFloat &x, int digits) {
    if (x == 0) {
        return "0";
    }
    return x.str(digits, std::ios_base::scientific);
}

HighFloat RationalPolynomial::operator()(const HighFloat &x) const {
    HighFloat v = 0;
    for (size_t d = coeffs.size(); d-- > 0;) {
        v = v * x + to_high(coeffs[d]);
    }
    return v;
}

HighFloat RationalPolynomial::derivative(const HighFloat &x) const {
    HighFloat v = 0;
    for (size_t d = coeffs.size(); d-- > 1;) {
        v = v * x + to_high(coeffs[d]) * HighFloat(d);
    }
    return v;
}

double RationalPolynomial::operator()(double x) const {
    double v = 0;
    for (size_t d = coeffs.size(); d-- > 0;) {
        v = v * x + to_double(coeffs[d]);
    }
    return v;
}

std::string RationalPolynomial::to_string(const std::string &var) const {
    std::ostringstream out;
    bool first = true;
    for (size_t d = coeffs.size(); d-- > 0;) {
        BigRatio c = coeffs[d];
        if (c == 0) {
            continue;
        }
        if (!first) {
            out << (c < 0 ? " - " : " + ");
            c = abs(c);
        } else if (c < 0) {
            out << "-";
            c = -c;
        }
        first = false;
        bool unit = c == 1 && d > 0;
        if (!unit) {
            bool integral = denominator(c) == 1;
            out << (integral || d == 0 ? "" : "(") << c << (integral || d == 0 ? "" : ")");
        }
        if (d > 0) {
            out << (unit ? "" : "*") << var;
            if (d > 1) {
                out << "^" << d;
            }
        }
    }
    return first ? "0" : out.str();
}

HighFloat polish_root(const RationalPolynomial &p, const HighFloat &lo, const HighFloat &hi, int digits) {
    PrecisionScope scope(digits);
    HighFloat flo = p(lo);
    HighFloat fhi = p(hi);
    if (flo == 0) {
        return lo;
    }
    if (fhi == 0) {
        return hi;
    }
    if ((flo < 0) == (fhi < 0)) {
        throw std::invalid_argument("polish_root: no sign change on the bracket");
    }
    auto f = [&](const HighFloat &x) {
        return std::make_pair(p(x), p.derivative(x));
    };
    int bits = int(digits * 3.33) + 8;
    boost::uintmax_t iters = 500;
    HighFloat guess = (lo + hi) / 2;
    return boost::math::tools::newton_raphson_iterate(f, guess, lo, hi, bits, iters);
}

namespace {

using HighMatrix = Eigen::Matrix<HighFloat, Eigen::Dynamic, Eigen::Dynamic>;
using HighVector = Eigen::Matrix<HighFloat, Eigen::Dynamic, 1>;

struct HighEval {
    std::vector<HighFloat> rows;
    HighMatrix jacobian;
};

int row_count(const ConditionSystem &system) {
    int rows = 0;
    for (const auto &eq : system.equations) {
        rows += eq.part() == Part::complex_value ? 2 : 1;
    }
    return rows;
}

// Residual rows and their derivatives with respect to the listed unknowns.
HighEval evaluate_high(
    const ConditionSystem &system,
    const std::vector<HighFloat> &x,
    const std::vector<HighFloat> &y,
    const std::vector<Unknown> &unknowns) {
    HighEval out;
    int rows = row_count(system);
    out.jacobian = HighMatrix::Zero(rows, (Eigen::Index)unknowns.size());
    int row = 0;
    for (const auto &eq : system.equations) {
        HighFloat re = 0;
        HighFloat im = 0;
        std::vector<HighFloat> dre(unknowns.size(), HighFloat(0));
        std::vector<HighFloat> dim(unknowns.size(), HighFloat(0));
        for (const auto &t : eq.terms()) {
            HighFloat w = to_high(t.weight);
            int i = t.i;
            int j = t.j;
            re += w * (x[i] * x[j] + y[i] * y[j]);
            im += w * (x[i] * y[j] - y[i] * x[j]);
            for (size_t u = 0; u < unknowns.size(); u++) {
                int p = 2 * unknowns[u].index;
                if (!unknowns[u].imag) {
                    if (p == i) {
                        dre[u] += w * x[j];
                        dim[u] += w * y[j];
                    }
                    if (p == j) {
                        dre[u] += w * x[i];
                        dim[u] -= w * y[i];
                    }
                } else {
                    if (p == i) {
                        dre[u] += w * y[j];
                        dim[u] -= w * x[j];
                    }
                    if (p == j) {
                        dre[u] += w * y[i];
                        dim[u] += w * x[i];
                    }
                }
            }
        }
        if (eq.part() != Part::imag_part) {
            out.rows.push_back(re);
            for (size_t u = 0; u < unknowns.size(); u++) {
                out.jacobian(row, (Eigen::Index)u) = dre[u];
            }
            row++;
        }
        if (eq.part() != Part::real_part) {
            out.rows.push_back(im);
            for (size_t u = 0; u < unknowns.size(); u++) {
                out.jacobian(row, (Eigen::Index)u) = dim[u];
            }
            row++;
        }
    }
    return out;
}

void split_full(
    int n,
    const std::vector<std::pair<HighFloat, HighFloat>> &even,
    std::vector<HighFloat> &x,
    std::vector<HighFloat> &y) {
    if ((int)even.size() != (n + 1) / 2) {
        throw std::invalid_argument("expected (n+1)/2 even-weight coefficients");
    }
    x.assign(n + 1, HighFloat(0));
    y.assign(n + 1, HighFloat(0));
    for (size_t m = 0; m < even.size(); m++) {
        x[2 * m] = even[m].first;
        y[2 * m] = even[m].second;
    }
}

}  // namespace

std::vector<HighFloat> high_residuals(
    const ConditionSystem &system, const std::vector<std::pair<HighFloat, HighFloat>> &even_coeffs) {
    std::vector<HighFloat> x, y;
    split_full(system.n, even_coeffs, x, y);
    return evaluate_high(system, x, y, {}).rows;
}

std::vector<std::pair<HighFloat, HighFloat>> polish_condition_system(
    const ConditionSystem &system,
    const std::vector<std::pair<HighFloat, HighFloat>> &start,
    const std::vector<Unknown> &unknowns,
    int digits) {
    PrecisionScope scope(digits);
    if (row_count(system) != (int)unknowns.size()) {
        throw std::invalid_argument("polish_condition_system: system must be square");
    }
    std::vector<HighFloat> x, y;
    split_full(system.n, start, x, y);
    HighFloat threshold = boost::multiprecision::pow(HighFloat(10), -(digits + 2));
    for (int iter = 0; iter < 200; iter++) {
        HighEval e = evaluate_high(system, x, y, unknowns);
        HighVector r((Eigen::Index)e.rows.size());
        for (size_t k = 0; k < e.rows.size(); k++) {
            r((Eigen::Index)k) = -e.rows[k];
        }
        HighVector step = e.jacobian.fullPivLu().solve(r);
        HighFloat size = 0;
        for (size_t u = 0; u < unknowns.size(); u++) {
            int p = 2 * unknowns[u].index;
            HighFloat s = step((Eigen::Index)u);
            (unknowns[u].imag ? y[p] : x[p]) += s;
            size = boost::multiprecision::max(size, HighFloat(boost::multiprecision::abs(s)));
        }
        if (size < threshold) {
            break;
        }
    }
    std::vector<std::pair<HighFloat, HighFloat>> out;
    for (int k = 0; k <= system.n; k += 2) {
        out.push_back({x[k], y[k]});
    }
    return out;
}

LeastSquaresResult solve_least_squares(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd &)> &residual,
    Eigen::VectorXd x0,
    int max_iterations,
    double tol) {
    Eigen::VectorXd x = std::move(x0);
    Eigen::VectorXd r = residual(x);
    double lambda = 1e-3;
    int iter = 0;
    for (; iter < max_iterations && r.norm() > tol; iter++) {
        Eigen::MatrixXd J(r.size(), x.size());
        for (Eigen::Index c = 0; c < x.size(); c++) {
            double h = 1e-7 * std::max(1.0, std::abs(x(c)));
            Eigen::VectorXd xp = x;
            xp(c) += h;
            J.col(c) = (residual(xp) - r) / h;
        }
        Eigen::MatrixXd A = J.transpose() * J;
        Eigen::VectorXd g = J.transpose() * r;
        bool improved = false;
        for (int attempt = 0; attempt < 40 && !improved; attempt++) {
            Eigen::MatrixXd M = A;
            for (Eigen::Index d = 0; d < M.rows(); d++) {
                M(d, d) += lambda * (1.0 + A(d, d));
            }
            Eigen::VectorXd xn = x - M.ldlt().solve(g);
            Eigen::VectorXd rn = residual(xn);
            if (rn.allFinite() && rn.norm() < r.norm()) {
                x = xn;
                r = rn;
                lambda = std::max(lambda / 3.0, 1e-15);
                improved = true;
            } else {
                lambda *= 4.0;
            }
        }
        if (!improved) {
            break;
        }
    }
    return {x, r.norm(), iter, r.norm() <= tol};
}

}  // namespace picodes

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

#include "picodes/code_workshop.h"

#include <cmath>
#include <mutex>

namespace picodes {

namespace {

BigRatio q(long long num, long long den = 1) {
    return BigRatio(BigInt(num), BigInt(den));
}

using HighPair = std::pair<HighFloat, HighFloat>;

struct Draft {
    std::string id;
    int n;
    std::vector<HighPair> a;
    std::vector<std::string> symbolic;
    std::vector<std::string> claims;
    std::string provenance;
    std::string defining_relation;
    // System whose residual certifies the coefficients; empty name when exact.
    std::string certify;
};

std::vector<HighPair> real_vector(std::initializer_list<HighFloat> values) {
    std::vector<HighPair> out;
    for (const auto &v : values) {
        out.push_back({v, HighFloat(0)});
    }
    return out;
}

CatalogEntry finish(const Draft &d, int digits) {
    std::vector<Complex> a;
    for (const auto &[re, im] : d.a) {
        a.emplace_back(re.convert_to<double>(), im.convert_to<double>());
    }
    CatalogEntry e{
        d.id, DickeCode::from_even_coefficients(d.n, a), d.claims, d.provenance, {}, {}, d.symbolic,
        d.defining_relation, 0.0};
    for (const auto &[re, im] : d.a) {
        e.exact_re.push_back(high_to_string(re, digits));
        e.exact_im.push_back(high_to_string(im, digits));
    }
    e.symbolic.resize(a.size());
    if (!d.certify.empty()) {
        ConditionSystem sys = d.certify == "onebit" ? appendixC_system(d.n) : xz_double_system(d.n);
        std::vector<HighFloat> rows = high_residuals(sys, d.a);
        HighFloat norm = 0;
        for (size_t m = 0; m < d.a.size(); m++) {
            norm += (d.a[m].first * d.a[m].first + d.a[m].second * d.a[m].second) *
                    HighFloat(binomial(d.n, 2 * (int)m).str());
        }
        HighFloat worst = 0;
        for (const auto &r : rows) {
            HighFloat v = boost::multiprecision::abs(r) / norm;
            if (v > worst) {
                worst = v;
            }
        }
        e.defining_residual = worst.convert_to<double>();
    }
    return e;
}

}  // namespace

RationalPolynomial nine_a6zero_quadratic() {
    return {{q(-1), q(2), q(175)}};
}

RationalPolynomial nine_a0zero_cubic() {
    return {{q(-1), q(-4), q(2 * 28 * 28, 25), q(28 * 28 * 28, 5)}};
}

RationalPolynomial nine_a0zero_printed_cubic() {
    return {{q(-1), q(-4), q(2 * 28 * 28, 5), q(28 * 28 * 28, 5)}};
}

HighFloat positive_root(const RationalPolynomial &p, int digits) {
    double prev_x = 0;
    double prev_v = p(0.0);
    for (int step = 1; step <= 4000; step++) {
        double x = 1e-6 * std::pow(10.0, 7.0 * step / 4000.0);
        double v = p(x);
        if ((v < 0) != (prev_v < 0) || v == 0) {
            PrecisionScope scope(digits);
            return polish_root(p, HighFloat(prev_x), HighFloat(x), digits);
        }
        prev_x = x;
        prev_v = v;
    }
    throw std::domain_error("positive_root: no sign change on (0, 10]");
}

std::vector<std::pair<HighFloat, HighFloat>> nine_xz_zz_solution(int digits) {
    PrecisionScope scope(digits);
    std::vector<HighPair> start{
        {HighFloat("-0.63836985"), HighFloat("-1.5526333")},
        {HighFloat("0.45156236"), HighFloat("-0.30016397")},
        {HighFloat("0.17459725"), HighFloat("-0.34817652")},
        {HighFloat("-0.36947265"), HighFloat(0)},
        {HighFloat(1), HighFloat(0)},
    };
    std::vector<Unknown> unknowns{{0, false}, {0, true}, {1, false}, {1, true}, {2, false}, {2, true}, {3, false}};
    return polish_condition_system(xz_double_system(9), start, unknowns, digits);
}

std::vector<CatalogEntry> build_catalog(int digits) {
    PrecisionScope scope(digits);
    std::vector<Draft> drafts;
    const std::vector<std::string> onebit_claims{"onebit", "onebit+exchange", "raw-onebit", "same-type-doubles"};

    drafts.push_back(
        {"rep3",
         3,
         real_vector({1, 0}),
         {"1", "0"},
         {"x-single", "same-type-doubles"},
         "three-qubit bit-flip repetition code |000>, |111>",
         "exact",
         ""});
    drafts.push_back(
        {"rep5",
         5,
         real_vector({1, 0, 0}),
         {"1", "0", "0"},
         {"x-single", "x1-all-doubles", "same-type-doubles"},
         "five-qubit bit-flip repetition code",
         "exact",
         ""});
    drafts.push_back(
        {"phase5",
         5,
         real_vector({1, 1, 1}),
         {"1", "1", "1"},
         {"z-single", "phase-single-double", "z1-all-doubles", "same-type-doubles"},
         "five-qubit phase code, Hadamard image of rep5: W0+W2+W4 / W1+W3+W5",
         "exact",
         ""});

    HighFloat s5 = boost::multiprecision::sqrt(HighFloat(5));
    HighFloat third = HighFloat(1) / 3;
    for (int sign : {1, -1}) {
        drafts.push_back(
            {sign > 0 ? "code7_plus" : "code7_minus",
             7,
             real_vector({sign * s5, -third, sign / s5, 1}),
             {sign > 0 ? "sqrt(5)" : "-sqrt(5)", "-1/3", sign > 0 ? "1/sqrt(5)" : "-1/sqrt(5)", "1"},
             onebit_claims,
             std::string("seven-qubit one-bit code, ") + (sign > 0 ? "+" : "-") +
                 " branch; normalized (1/8)[" + (sign > 0 ? "" : "-") + "sqrt(15) W^0 - sqrt(7) W^2 " +
                 (sign > 0 ? "+" : "-") + " sqrt(21) W^4 + sqrt(21) W^6] in the normalized weight basis",
             "a4^2 = 1/5 is the real root of 125x^3 + 5x^2 - x - 1; a2 = -(5/3)a4^2, a0 = 25 a4^3, a6 = 1",
             "onebit"});
    }

    HighFloat s28 = boost::multiprecision::sqrt(HighFloat(28));
    for (int sign : {1, -1}) {
        drafts.push_back(
            {sign > 0 ? "ruskai9_plus" : "ruskai9_minus",
             9,
             real_vector({sign * s28, 0, 0, 1, 0}),
             {sign > 0 ? "sqrt(28)" : "-sqrt(28)", "0", "0", "1", "0"},
             {"onebit", "onebit+exchange", "raw-onebit"},
             "nine-qubit one-bit code on the a8 = 0 branch: a0^2 = 28 a6^2, a2 = a4 = 0",
             "a0^2 = 28, a6 = 1",
             "onebit"});
    }

    HighFloat x6 = positive_root(nine_a6zero_quadratic(), digits);
    for (int sign : {1, -1}) {
        drafts.push_back(
            {sign > 0 ? "nine_a6zero" : "nine_a6zero_minus",
             9,
             real_vector({-35 * x6, 0, sign * boost::multiprecision::sqrt(x6), 0, 1}),
             {"-35x", "0", sign > 0 ? "sqrt(x)" : "-sqrt(x)", "0", "1"},
             {"onebit", "onebit+exchange", "raw-onebit"},
             "nine-qubit one-bit code on the a6 = 0 branch (a8 = 1, a2 = 0, a0 = -35 a4^2); "
             "x = a4^2 = (-1 + 4 sqrt(11))/175",
             "x = a4^2 is the positive root of " + nine_a6zero_quadratic().to_string("x"),
             "onebit"});
    }

    HighFloat t = positive_root(nine_a0zero_cubic(), digits);
    HighFloat t_printed = positive_root(nine_a0zero_printed_cubic(), digits);
    for (int sign : {1, -1}) {
        HighFloat a6 = sign * boost::multiprecision::sqrt(t);
        HighFloat a4 = HighFloat(28) / 5 * t;
        HighFloat a2 = -7 * a4 * a6;
        drafts.push_back(
            {sign > 0 ? "nine_a0zero" : "nine_a0zero_minus",
             9,
             real_vector({0, a2, a4, a6, 1}),
             {"0", "-(196/5) t a6", "(28/5) t", sign > 0 ? "sqrt(t)" : "-sqrt(t)", "1"},
             {"onebit", "onebit+exchange", "raw-onebit"},
             "nine-qubit one-bit code on the a0 = 0 branch (a8 = 1), t = a6^2 = " + high_to_string(t, 20) +
                 ". The cubic with t^2 coefficient 2*28^2/5 (root " + high_to_string(t_printed, 12) +
                 ", also quoted as 0.478) does not satisfy the third one-bit equation; the correct t^2 "
                 "coefficient is 2*28^2/25, and a2 = -7 a4 a6 = -(196/5) t a6 rather than -196 t",
             "t = a6^2 is the positive root of " + nine_a0zero_cubic().to_string("t"),
             "onebit"});
    }

    std::vector<HighPair> xz = nine_xz_zz_solution(digits);
    drafts.push_back(
        {"nine_xz_zz",
         9,
         xz,
         {},
         {"xz-zz", "same-type-doubles"},
         "nine-qubit code correcting every X_k, Z_k and Z_j Z_k (no Y_k); isolated solution of the "
         "corresponding condition system with a8 = 1 and a6 real",
         "Newton-polished root of the {I, X_k, Z_k, Z_j Z_k} condition system with a8 = 1, Im a6 = 0",
         "xz"});

    std::vector<CatalogEntry> out;
    for (const auto &d : drafts) {
        out.push_back(finish(d, digits));
    }
    for (const auto &e : out) {
        if (e.defining_residual > 1e-30) {
            throw CatalogError(
                "catalog entry " + e.id + ": defining relation residual " + std::to_string(e.defining_residual));
        }
    }
    for (const auto &c : validate_catalog(out)) {
        if (!c.passed) {
            throw CatalogError("catalog entry " + c.entry + " fails its claimed error set " + c.error_set);
        }
    }
    return out;
}

const std::vector<CatalogEntry> &catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog(DEFAULT_PRECISION_DIGITS);
    return entries;
}

const CatalogEntry &catalog_entry(const std::string &id) {
    for (const auto &e : catalog()) {
        if (e.id == id) {
            return e;
        }
    }
    throw std::out_of_range("unknown catalog id '" + id + "'");
}

std::vector<ClaimCheck> validate_catalog(const std::vector<CatalogEntry> &entries, double tol) {
    std::vector<ClaimCheck> out;
    for (const auto &e : entries) {
        for (const auto &set : e.claimed_correctable) {
            std::vector<ErrorOp> errors = named_error_set(set, e.code.n);
            KLReport r = kl_matrices(e.code, errors, tol);
            out.push_back({e.id, set, r.correctable, r.max_B(), r.max_D_gap()});
        }
    }
    return out;
}

std::array<double, 3> nine_family_quadratic(double t) {
    return {5488 * t * t, 4 * (-490 * t * t * t + 35 * t * t - 1), 175 * t * t * t * t + 2 * t * t - 1};
}

RationalPolynomial nine_family_discriminant() {
    return {{q(1), q(0), q(1302), q(980), q(-1519), q(-34300)}};
}

HighFloat nine_family_t_limit(int digits) {
    return positive_root(nine_family_discriminant(), digits);
}

std::vector<std::vector<double>> solve_nine_family(double t, int digits) {
    PrecisionScope scope(digits);
    HighFloat T(t);
    HighFloat A = 5488 * T * T;
    HighFloat B = 4 * (-490 * T * T * T + 35 * T * T - 1);
    HighFloat C = 175 * T * T * T * T + 2 * T * T - 1;
    std::vector<HighFloat> roots;
    if (A == 0) {
        if (B != 0) {
            roots.push_back(-C / B);
        }
    } else {
        HighFloat disc = B * B - 4 * A * C;
        if (disc >= 0) {
            HighFloat sd = boost::multiprecision::sqrt(disc);
            roots.push_back((-B - sd) / (2 * A));
            if (disc > 0) {
                roots.push_back((-B + sd) / (2 * A));
            }
        }
    }
    std::vector<std::vector<double>> out;
    for (const auto &x : roots) {
        if (x <= 0) {
            continue;
        }
        for (int sign : {1, -1}) {
            HighFloat a6 = sign * boost::multiprecision::sqrt(x);
            HighFloat a2 = -7 * T * a6;
            HighFloat a0 = 7 * (28 * T * x - 5 * T * T);
            std::vector<double> a{
                a0.convert_to<double>(), a2.convert_to<double>(), t, a6.convert_to<double>(), 1.0};
            ConditionResidual r = theorem1_residuals(9, a);
            if (!r.passes(1e-10)) {
                throw std::logic_error(
                    "solve_nine_family: produced vector fails the one-bit equations (scale-free " +
                    std::to_string(r.max_scale_free) + ")");
            }
            out.push_back(a);
        }
    }
    return out;
}

}  // namespace picodes

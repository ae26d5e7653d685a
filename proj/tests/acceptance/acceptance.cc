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

// Acceptance run: one PASS/FAIL line per criterion, sub-checks indented below.
// Exits 0 when the run completes; with --strict any FAIL gives exit 1.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "picodes/code_workshop.h"
#include "picodes/full_space.h"
#include "picodes/kl_checker.h"
#include "picodes/report.h"
#include "picodes/rep_theory.h"

using namespace picodes;

namespace {

constexpr double GRAM_TOL = 1e-10;
constexpr double FAMILY_ORACLE_TOL = 1e-9;
constexpr double SCAN_REGRESSION = 6.00767712254e-3;

struct Criterion {
    int id;
    std::string title;
    double budget_seconds;
    std::vector<CheckOutcome> subs;
    double seconds = 0;

    void sub(std::string name, bool passed, std::string detail) {
        subs.push_back({std::move(name), passed, std::move(detail)});
    }
    bool passed() const {
        for (const auto &s : subs) {
            if (!s.passed) {
                return false;
            }
        }
        return !subs.empty();
    }
};

std::string yes(bool b) {
    return b ? "yes" : "no";
}

std::vector<Complex> random_complex(int count, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> a(count);
    for (auto &z : a) {
        z = Complex(g(rng), g(rng));
    }
    return a;
}

double cosine(const DickeVector &u, const DickeVector &v) {
    return std::abs(u.inner(v)) / (u.norm() * v.norm());
}

double fidelity(const DickeVector &a, const DickeVector &b) {
    return cosine(a, b);
}

bool family_code_passes(double t, int *count) {
    auto sols = solve_nine_family(t);
    *count = (int)sols.size();
    if (sols.empty()) {
        return false;
    }
    for (const auto &a : sols) {
        std::vector<Complex> c(a.begin(), a.end());
        DickeCode code = DickeCode::from_even_coefficients(9, c);
        if (!kl_matrices(code, named_error_set("onebit", 9), FAMILY_ORACLE_TOL).correctable) {
            return false;
        }
    }
    return true;
}

void criterion1(Criterion &c) {
    for (const char *id : {"code7_plus", "code7_minus"}) {
        const DickeCode &code = catalog_entry(id).code;
        for (const char *set : {"onebit", "onebit+exchange"}) {
            KLReport r = kl_matrices(code, named_error_set(set, 7), GRAM_TOL);
            double worst = std::max(r.max_B(), r.max_D_gap());
            c.sub(std::string(id) + " " + set, r.correctable && worst <= GRAM_TOL,
                  std::to_string(r.error_labels.size()) + " errors, max violation " + fmt_num(worst));
        }
        DickeVector c0 = code.c0.normalized();
        DickeVector c1 = code.c1.normalized();
        std::vector<DickeVector> vs{c0, apply_avg_Z(c0), apply_avg_X(c1), apply_avg_Y(c1)};
        double worst = 0;
        for (size_t i = 0; i < vs.size(); i++) {
            for (size_t j = i + 1; j < vs.size(); j++) {
                worst = std::max(worst, cosine(vs[i], vs[j]));
            }
        }
        c.sub(std::string(id) + " orthogonal set {c0, Zc0, Xc1, Yc1}", worst <= GRAM_TOL,
              "max normalized overlap " + fmt_num(worst));
    }
}

Polynomial golden(const std::string &name, std::map<std::pair<int, int>, int> terms) {
    Polynomial p{name, {}};
    for (auto [k, v] : terms) {
        p.coeffs[k] = v;
    }
    return p;
}

void criterion2(Criterion &c) {
    std::map<int, std::vector<Polynomial>> want{
        {5,
         {golden("5a", {{{2, 4}, 1}}), golden("5b", {{{0, 4}, 1}, {{2, 2}, 3}}),
          golden("5c", {{{0, 0}, 1}, {{2, 2}, 2}, {{4, 4}, -3}})}},
        {7,
         {golden("7a", {{{2, 6}, 3}, {{4, 4}, 5}}), golden("7b", {{{0, 6}, 1}, {{2, 4}, 15}}),
          golden("7c", {{{0, 0}, 1}, {{2, 2}, 9}, {{4, 4}, -5}, {{6, 6}, -5}})}},
        {9,
         {golden("9a", {{{2, 8}, 1}, {{4, 6}, 7}}), golden("9b", {{{4, 4}, 35}, {{0, 8}, 1}, {{2, 6}, 28}}),
          golden("9c", {{{0, 0}, 1}, {{2, 2}, 20}, {{4, 4}, 14}, {{6, 6}, -28}, {{8, 8}, -7}})}},
    };
    for (const auto &[n, polys] : want) {
        auto got = specialize_theorem1(n);
        for (size_t i = 0; i < polys.size(); i++) {
            bool ok = i < got.size() && got[i].proportional_to(polys[i]);
            c.sub("n=" + std::to_string(n) + " " + polys[i].name, ok,
                  i < got.size() ? got[i].to_string() : std::string("missing"));
        }
    }
}

void criterion3(Criterion &c) {
    ProofTrace t = five_bit_nonexistence();
    c.sub("case split", t.established, t.verdict + " (" + std::to_string(t.steps.size()) + " steps)");
    SamplingReport s = five_bit_sampling(100000);
    c.sub("random corroboration", s.near_solutions == 0,
          std::to_string(s.samples) + " samples with norm >= 1e-3, " + std::to_string(s.near_solutions) +
              " with scale-free residual <= 1e-6, min " + fmt_num(s.min_scale_free));
}

void criterion4(Criterion &c) {
    auto sols = phase5_solutions(50);
    double inv = 1 / std::sqrt(3.0);
    double worst = 0;
    for (const auto &s : sols) {
        for (double v : s) {
            worst = std::max(worst, std::abs(v - inv));
        }
    }
    c.sub("random search", !sols.empty() && worst <= 1e-8,
          std::to_string(sols.size()) + " converged solutions, max distance from the equal-modulus ray " +
              fmt_num(worst));
}

void criterion5(Criterion &c) {
    const DickeCode &rep5 = catalog_entry("rep5").code;
    const DickeCode &phase5 = catalog_entry("phase5").code;
    KLReport r = kl_matrices(rep5, named_error_set("x1-all-doubles", 5));
    c.sub("rep5 {I, X_r, X_rX_s, Y_rY_s, Z_rZ_s}", r.correctable,
          std::to_string(r.error_labels.size()) + " errors, max violation " +
              fmt_num(std::max(r.max_B(), r.max_D_gap())));
    KLReport p = kl_matrices(phase5, named_error_set("z1-all-doubles", 5));
    c.sub("phase5 {I, Z_r, Z_rZ_s, X_rX_s, Y_rY_s}", p.correctable,
          std::to_string(p.error_labels.size()) + " errors, max violation " +
              fmt_num(std::max(p.max_B(), p.max_D_gap())));
    DickeCode img = hadamard_code_map(rep5);
    double f0 = fidelity(img.c0, phase5.c0), f1 = fidelity(img.c1, phase5.c1);
    c.sub("H(rep5) = phase5", std::min(f0, f1) >= 1 - 1e-12,
          "fidelities " + fmt_num(f0) + ", " + fmt_num(f1));
    DickeCode back = hadamard_code_map(phase5);
    double g0 = fidelity(back.c0, rep5.c0), g1 = fidelity(back.c1, rep5.c1);
    c.sub("H(phase5) = rep5", std::min(g0, g1) >= 1 - 1e-12,
          "fidelities " + fmt_num(g0) + ", " + fmt_num(g1));
}

void criterion6(Criterion &c) {
    PrecisionScope scope(DEFAULT_PRECISION_DIGITS);
    for (const char *id : {"ruskai9_plus", "ruskai9_minus"}) {
        KLReport r = kl_matrices(catalog_entry(id).code, named_error_set("onebit", 9));
        c.sub(std::string(id) + " one-bit oracle", r.correctable,
              "max violation " + fmt_num(std::max(r.max_B(), r.max_D_gap())));
    }

    HighFloat x = positive_root(nine_a6zero_quadratic());
    double a4 = catalog_entry("nine_a6zero").code.even_coefficients()[2].real();
    double q = std::abs(nine_a6zero_quadratic()(a4 * a4));
    c.sub("nine_a6zero: 175x^2 + 2x - 1 = 0", q <= 1e-14,
          "x = " + high_to_string(x, 15) + ", residual at catalog a4^2 " + fmt_num(q));

    // a0 = 0 branch, a8 = 1: a4 = (28/5)t, a6 = sqrt(t), a2 = -7 a4 a6.
    auto branch_code = [](double t) {
        double a4 = 28.0 / 5 * t, a6 = std::sqrt(t);
        std::vector<Complex> a{0.0, -7 * a4 * a6, a4, a6, 1.0};
        return DickeCode::from_even_coefficients(9, a);
    };
    const CatalogEntry &a0z = catalog_entry("nine_a0zero");
    double a6 = a0z.code.even_coefficients()[3].real();
    double t_cat = a6 * a6;
    double printed_at_cat = std::abs(nine_a0zero_printed_cubic()(t_cat));
    HighFloat t_printed = positive_root(nine_a0zero_printed_cubic());
    c.sub("nine_a0zero root satisfies the printed cubic", printed_at_cat <= 1e-14,
          "catalog t = " + fmt_num(t_cat) + " gives printed-cubic value " + fmt_num(printed_at_cat) +
              "; the printed cubic's own root is " + high_to_string(t_printed, 13) +
              " (quoted ~0.04775); the printed t^2 coefficient should be 1568/25, not 1568/5");
    KLReport printed_code = kl_matrices(branch_code(t_printed.convert_to<double>()), named_error_set("onebit", 9));
    c.sub("printed-cubic root gives no code (expected)", !printed_code.correctable,
          "one-bit oracle max violation " + fmt_num(std::max(printed_code.max_B(), printed_code.max_D_gap())));
    double corrected = std::abs(nine_a0zero_cubic()(t_cat));
    KLReport cat_code = kl_matrices(a0z.code, named_error_set("onebit", 9));
    c.sub("nine_a0zero root satisfies the corrected cubic", corrected <= 1e-14 && cat_code.correctable,
          "residual " + fmt_num(corrected) + ", one-bit oracle " + (cat_code.correctable ? "pass" : "fail"));

    double t_star = nine_family_t_limit().convert_to<double>();
    std::string failed;
    int good = 0;
    for (int i = 0; i < 20; i++) {
        double t = -0.25 + 0.65 * (i + 0.5) / 20;
        int count = 0;
        if (family_code_passes(t, &count)) {
            good++;
        } else {
            failed += (failed.empty() ? "" : ", ") + fmt_num(t);
        }
    }
    c.sub("20 sampled t in (-0.25, 0.4)", good == 20,
          std::to_string(good) + "/20 yield a code passing the one-bit oracle at 1e-9" +
              (failed.empty() ? "" : "; none at t = " + failed) + "; the family discriminant vanishes at t* = " +
              fmt_num(t_star) + ", beyond which no real solution exists");
    int good_star = 0;
    for (int i = 0; i < 20; i++) {
        double t = -0.25 + (t_star + 0.25) * (i + 0.5) / 20;
        int count = 0;
        good_star += family_code_passes(t, &count);
    }
    c.sub("20 sampled t in (-0.25, t*) (supplementary)", good_star == 20,
          std::to_string(good_star) + "/20 pass");
}

void criterion7(Criterion &c) {
    BracketReport b = nogo_bracket_positivity(10000);
    c.sub("(i) bracket", b.min_bracket >= 15 - 1e-9,
          "min over " + std::to_string(b.samples) + " family points " + fmt_num(b.min_bracket) +
              ", ImXY factorization gap " + fmt_num(b.max_consistency_error));
    ScanResult s = nogo_residual_scan(ScanSpec{});
    bool regression = std::abs(s.min_residual - SCAN_REGRESSION) <= 1e-9;
    c.sub("(ii) residual scan", s.min_residual > 1e-3 && regression,
          "min " + fmt_num(s.min_residual) + " at x = " + fmt_num(s.argmin_x) + ", y = " + fmt_num(s.argmin_y) +
              " over " + std::to_string(s.evaluated_points) + " evaluations (201x201 grid + refinement); frozen " +
              fmt_num(SCAN_REGRESSION));
    MultistartReport m = drop_imxy_search(200);
    c.sub("(iii) ImXY dropped", s.min_residual > 1e-3 && m.converged == 0,
          "family scan unchanged (it uses dZZa, dbIZZ only); direct search " + std::to_string(m.starts) +
              " starts, " + std::to_string(m.converged) + " converged, best residual " + fmt_num(m.best_residual));
    DropYReport d = drop_y_search(50);
    c.sub("(iii) all Y conditions dropped", d.converged == 0 && !d.oracle_pass,
          std::to_string(d.converged) + "/" + std::to_string(d.starts) + " starts solve the system " +
              "(best residual " + fmt_num(d.best_residual) + "); full-space oracle on {I, X_k, Z_k, Z_jZ_k}: " +
              (d.oracle_pass ? "correctable" : "not correctable") +
              ". A 9-qubit code correcting X_k, Z_k, Z_jZ_k exists (catalog nine_xz_zz)");
}

void criterion8(Criterion &c) {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0, 1);
    for (int n : {5, 7, 9}) {
        std::vector<std::vector<Complex>> vectors;
        for (int i = 0; i < 200; i++) {
            vectors.push_back(random_complex((n + 1) / 2, rng));
        }
        // Vectors built to pass: known codes under global phase/scale and conjugation.
        std::vector<std::vector<Complex>> seeds;
        for (const auto &e : catalog()) {
            if (e.code.n == n && appendixC_residuals(n, e.code.even_coefficients()).passes()) {
                seeds.push_back(e.code.even_coefficients());
            }
        }
        if (n == 9) {
            for (int i = 0; i < 20; i++) {
                double t = -0.24 + 0.58 * u(rng);
                for (const auto &a : solve_nine_family(t)) {
                    seeds.emplace_back(a.begin(), a.end());
                }
            }
        }
        for (const auto &s : seeds) {
            for (int rep = 0; rep < 3; rep++) {
                Complex lambda = std::polar(0.1 + 3 * u(rng), 6.283185307179586 * u(rng));
                std::vector<Complex> v(s.size());
                for (size_t k = 0; k < s.size(); k++) {
                    v[k] = lambda * (rep == 2 ? std::conj(s[k]) : s[k]);
                }
                vectors.push_back(v);
                std::vector<Complex> w = v;
                w[rep % w.size()] += 1e-4 * std::abs(lambda);
                vectors.push_back(w);
            }
        }
        std::vector<ErrorOp> errors = named_error_set("onebit", n);
        int agree = 0, passing = 0;
        for (const auto &v : vectors) {
            bool engine = appendixC_residuals(n, v).passes(ENGINE_DEFAULT_TOL);
            bool oracle = kl_matrices(DickeCode::from_even_coefficients(n, v), errors, KL_DEFAULT_TOL).correctable;
            agree += engine == oracle;
            passing += oracle;
        }
        c.sub("n=" + std::to_string(n), agree == (int)vectors.size(),
              std::to_string(agree) + "/" + std::to_string(vectors.size()) + " verdicts agree (200 random, " +
                  std::to_string(vectors.size() - 200) + " constructed; " + std::to_string(passing) +
                  " correctable)");
    }
}

void criterion9(Criterion &c) {
    double worst_v = 0, worst_z = 0, worst_d = 0;
    long cases = 0;
    std::mt19937_64 rng(9);
    for (int n = 4; n <= 9; n++) {
        std::vector<std::pair<int, int>> pairs{{1, 2}, {2, 1}, {1, 3}, {3, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 3}, {1, 4}};
        for (int k = 0; k <= n - 2; k++) {
            for (auto [r, s] : pairs) {
                for (auto [p, q] : pairs) {
                    for (int l : {k, (k + 1) % (n - 1)}) {
                        std::vector<Complex> e1(n - 1), e2(n - 1);
                        e1[k] = 1;
                        e2[l] = 1;
                        VExpansion v1(n, r, s, e1), v2(n, p, q, e2);
                        Complex want = embed(v1).inner(embed(v2));
                        worst_v = std::max(worst_v, std::abs(v_inner_product(v1, v2) - want));
                        cases++;
                    }
                }
            }
            std::vector<Complex> e(n - 1);
            e[k] = 1;
            DenseState a = apply(ops::pauli(Pauli::Z, 1), embed(VExpansion(n, 1, 2, e)));
            Complex want = a.inner(embed(VExpansion(n, 1, 3, e)));
            worst_z = std::max(worst_z, std::abs(to_double(z1_weighted_inner(k, n)) - want));
        }
        std::vector<Complex> coeffs = random_complex(n + 1, rng);
        DickeVector v(n, coeffs);
        DenseState psi = embed(v);
        const Complex i(0, 1);
        for (auto [r, s] : pairs) {
            ErrorOp dx = ops::difference(Pauli::X, r, s);
            ErrorOp diy = ops::difference(Pauli::Y, r, s) * i;
            std::vector<std::pair<DifferenceKind, ErrorOp>> kinds{
                {DifferenceKind::Z, ops::difference(Pauli::Z, r, s)},
                {DifferenceKind::X, dx},
                {DifferenceKind::iY, diy},
                {DifferenceKind::X_plus_iY, dx + diy},
                {DifferenceKind::X_minus_iY, dx - diy},
            };
            for (const auto &[kind, op] : kinds) {
                double gap = embed(difference_action(kind, v, r, s)).distance(apply(op, psi)) / psi.norm();
                worst_d = std::max(worst_d, gap);
            }
        }
    }
    c.sub("v_inner_product", worst_v <= 1e-12,
          std::to_string(cases) + " cases over n = 4..9 (equal, reversed, shared-index and disjoint pairs), max gap " +
              fmt_num(worst_v));
    c.sub("z1_weighted_inner", worst_z <= 1e-12, "all k, n = 4..9, max gap " + fmt_num(worst_z));
    c.sub("difference_action", worst_d <= 1e-12,
          "X, iY, Z and X +- iY differences vs oracle, max relative gap " + fmt_num(worst_d));
}

void criterion10(Criterion &c) {
    std::map<int, std::vector<std::vector<long>>> golden{
        {5, {{1}, {1, 4}, {1, 4, 5}, {1, 4, 5}, {1, 4}, {1}}},
        {7, {{1}, {1, 6}, {1, 6, 14}, {1, 6, 14, 14}, {1, 6, 14, 14}, {1, 6, 14}, {1, 6}, {1}}},
        {9,
         {{1},
          {1, 8},
          {1, 8, 27},
          {1, 8, 27, 48},
          {1, 8, 27, 48, 42},
          {1, 8, 27, 48, 42},
          {1, 8, 27, 48},
          {1, 8, 27},
          {1, 8},
          {1}}},
    };
    for (auto &[n, rows] : golden) {
        auto got = decomposition_table(n).dims();
        bool ok = got.size() == rows.size();
        for (size_t k = 0; ok && k < rows.size(); k++) {
            auto a = got[k], b = rows[k];
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            ok = a == b;
        }
        c.sub("table n=" + std::to_string(n), ok, "rows compared as multisets");
    }
    std::string spectral;
    bool all = true;
    for (int n = 1; n <= 9; n++) {
        bool ok = spectral_verify(n);
        all = all && ok;
        if (!ok) {
            spectral += " n=" + std::to_string(n);
        }
    }
    c.sub("spectral_verify n <= 9", all, all ? "S^2 multiplicities match on every weight block" : "fails at" + spectral);
    DoubleErrorSplit s = double_error_split(4);
    c.sub("double_error_split(4)", s.trivial == 1 && s.standard == 3 && s.remainder == 2,
          "(" + std::to_string(s.trivial) + ", " + std::to_string(s.standard) + ", " + std::to_string(s.remainder) +
              ")");
    ExampleSplitCheck e = n4_example_check();
    std::string realized;
    for (const auto &r : e.realized_ranks) {
        realized += " (" + std::to_string(r[0]) + "," + std::to_string(r[1]) + "," + std::to_string(r[2]) + ")";
    }
    c.sub("n=4 printed combinations", e.passed,
          "coefficient ranks (" + std::to_string(e.coefficient_ranks[0]) + "," +
              std::to_string(e.coefficient_ranks[1]) + "," + std::to_string(e.coefficient_ranks[2]) +
              "), overlap " + fmt_num(e.coefficient_overlap) + "; on W_2 for X, Y, Z ranks" + realized +
              ", overlap " + fmt_num(e.realized_overlap) +
              " (on W_2 at n = 4 a pair acts like its complement, so the 3-dim piece realizes to zero)");
}

void criterion11(Criterion &c) {
    std::mt19937_64 rng(11);
    std::vector<ErrorOp> errors = named_error_set("onebit", 7);
    std::vector<SignClass> classes;
    for (const auto &e : errors) {
        classes.push_back(*sign_class(e));
    }
    std::vector<RepSector> sectors = symmetrized_sectors(7);
    std::map<std::string, int> by_rule;
    int correctable = 0;
    double circ = 0;
    for (int i = 0; i < 50; i++) {
        DickeCode code = DickeCode::from_even_coefficients(7, random_complex(4, rng));
        KLReport r = kl_matrices(code, errors);
        correctable += r.correctable;
        for (const auto &v : block_structure_check(r, classes, sectors, GRAM_TOL)) {
            by_rule[v.rule]++;
        }
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            circ = std::max(circ, circulant_deviation(code, p));
        }
    }
    std::string rules;
    for (auto &[k, v] : by_rule) {
        rules += " " + k + ":" + std::to_string(v);
    }
    c.sub("zero patterns and sign relations", by_rule.empty(),
          "50 random codes (" + std::to_string(correctable) +
              " correctable), rules A, B, C (covers D), E and trivial/standard orthogonality; violations" +
              (rules.empty() ? std::string(" none") : rules));
    c.sub("circulant per-qubit blocks", circ <= GRAM_TOL, "max deviation " + fmt_num(circ));
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"picodes acceptance run"};
    bool strict = false;
    bool quiet = false;
    app.add_flag("--strict", strict, "Exit with status 1 when any criterion fails");
    app.add_flag("--quiet", quiet, "Print only the criterion lines");
    CLI11_PARSE(app, argc, argv);

    std::vector<std::pair<Criterion, std::function<void(Criterion &)>>> plan{
        {{1, "n=7 codes: one-bit and exchange oracle, orthogonal set", 2}, criterion1},
        {{2, "one-bit polynomial specialization at n = 5, 7, 9 (exact)", 0}, criterion2},
        {{3, "n=5 impossibility: case split and sampling", 0}, criterion3},
        {{4, "n=5 phase-code uniqueness", 0}, criterion4},
        {{5, "repetition/phase degeneracy and Hadamard map", 0}, criterion5},
        {{6, "n=9 real family and irrational codes", 0}, criterion6},
        {{7, "n=9 double-error no-go", 60}, criterion7},
        {{8, "engine-oracle equivalence", 0}, criterion8},
        {{9, "V-vector formula suite", 0}, criterion9},
        {{10, "decomposition tables, spectra, n=4 split", 0}, criterion10},
        {{11, "block structure on random codes", 0}, criterion11},
    };

    std::cout << "picodes " << PICODES_VERSION << " acceptance\n";
    std::cout << "tolerances: engine " << fmt_num(ENGINE_DEFAULT_TOL) << " scale-free, oracle "
              << fmt_num(KL_DEFAULT_TOL) << ", Gram " << fmt_num(GRAM_TOL) << ", family oracle "
              << fmt_num(FAMILY_ORACLE_TOL) << "\n";
    (void)catalog();
    int failures = 0;
    for (auto &[c, run] : plan) {
        auto start = std::chrono::steady_clock::now();
        try {
            run(c);
        } catch (const std::exception &e) {
            c.sub("exception", false, e.what());
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.3f s (budget %.0f s)", c.seconds, c.budget_seconds);
            c.sub("runtime", c.seconds < c.budget_seconds, buf);
        }
        bool ok = c.passed();
        failures += !ok;
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.2f s", c.seconds);
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << secs << "]\n";
        if (!quiet) {
            for (const auto &s : c.subs) {
                std::cout << "    " << (s.passed ? "ok   " : "FAIL ") << s.name << ": " << s.detail << "\n";
            }
        }
    }
    std::cout << "summary: " << (plan.size() - failures) << "/" << plan.size() << " criteria pass";
    std::cout << (strict ? " (strict)" : "") << "\n";
    return strict && failures > 0 ? 1 : 0;
}

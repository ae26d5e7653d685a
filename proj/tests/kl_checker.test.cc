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

#include "picodes/kl_checker.h"

#include <gtest/gtest.h>

#include <random>

#include "json.hpp"
#include "picodes/code_workshop.h"

using namespace picodes;

namespace {

DickeCode random_code(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> a((n + 1) / 2);
    for (auto &z : a) {
        z = Complex(g(rng), g(rng));
    }
    return DickeCode::from_even_coefficients(n, a);
}

std::vector<SignClass> classes_of(const std::vector<ErrorOp> &errors) {
    std::vector<SignClass> out;
    for (const auto &e : errors) {
        auto c = sign_class(e);
        EXPECT_TRUE(c.has_value()) << e.label();
        out.push_back(c.value_or(SignClass{1, 1}));
    }
    return out;
}

}  // namespace

TEST(kl_checker, rep5_single_flips) {
    const DickeCode &rep5 = catalog_entry("rep5").code;
    std::vector<ErrorOp> errors = named_error_set("x-single", 5);
    ASSERT_EQ(errors.size(), 6u);
    KLReport r = kl_matrices(rep5, errors);
    ASSERT_TRUE(r.correctable);
    ASSERT_TRUE(r.violations.empty());
    ASSERT_LT(r.max_B(), 1e-12);
    ASSERT_LT(r.max_D_gap(), 1e-12);
}

TEST(kl_checker, rep5_fails_with_phase_error) {
    const DickeCode &rep5 = catalog_entry("rep5").code;
    std::vector<ErrorOp> errors = named_error_set("x-single", 5);
    errors.push_back(ops::pauli(Pauli::Z, 1));
    KLReport r = kl_matrices(rep5, errors);
    ASSERT_FALSE(r.correctable);
    ASSERT_FALSE(r.violations.empty());
    bool found = false;
    for (const auto &v : r.violations) {
        found |= v.matrix == "D00-D11" && (v.p == 6 || v.q == 6);
    }
    ASSERT_TRUE(found);
}

TEST(kl_checker, code7_onebit) {
    for (const char *id : {"code7_plus", "code7_minus"}) {
        const DickeCode &code = catalog_entry(id).code;
        for (const char *set : {"onebit", "onebit+exchange", "raw-onebit"}) {
            KLReport r = kl_matrices(code, named_error_set(set, 7));
            ASSERT_TRUE(r.correctable) << id << " " << set;
            ASSERT_LT(r.max_B(), 1e-10);
            ASSERT_LT(r.max_D_gap(), 1e-10);
        }
    }
}

TEST(kl_checker, symmetrized_set_sizes) {
    ASSERT_EQ(symmetrized_error_set(5).size(), 16u);
    ASSERT_EQ(symmetrized_error_set(7).size(), 22u);
    ASSERT_EQ(symmetrized_error_set(9).size(), 28u);
    ASSERT_EQ(named_error_set("onebit+exchange", 7).size(), 22u + 21u);
    ASSERT_EQ(named_error_set("same-type-doubles", 5).size(), 31u);
    ASSERT_EQ(symmetrized_sectors(5).size(), 16u);
}

TEST(kl_checker, named_sets_reject_unknown) {
    ASSERT_THROW(named_error_set("bogus", 5), std::invalid_argument);
    ASSERT_THROW(named_error_set("custom:XX", 5), std::invalid_argument);
    ASSERT_EQ(named_error_set("custom:XIIII,IZIZI", 5).size(), 2u);
    for (const auto &name : error_set_names()) {
        ASSERT_NO_THROW(named_error_set(name, 5)) << name;
    }
}

TEST(kl_checker, rejects_out_of_range_errors) {
    const DickeCode &rep3 = catalog_entry("rep3").code;
    std::vector<ErrorOp> errors{ops::pauli(Pauli::X, 4)};
    ASSERT_THROW(kl_matrices(rep3, errors), std::invalid_argument);
}

TEST(kl_checker, sign_classes) {
    auto c = sign_class(ops::pauli(Pauli::X, 1));
    ASSERT_TRUE(c.has_value());
    ASSERT_EQ(c->eps_Z, -1);
    ASSERT_EQ(c->eps_X, 1);
    c = sign_class(ops::pauli(Pauli::Y, 2));
    ASSERT_EQ(c->eps_Z, -1);
    ASSERT_EQ(c->eps_X, -1);
    c = sign_class(ops::pauli_pair(Pauli::X, 1, 2));
    ASSERT_EQ(c->eps_Z, 1);
    ASSERT_FALSE(sign_class(ops::pauli(Pauli::X, 1) + ops::pauli(Pauli::Z, 1)).has_value());
}

TEST(kl_checker, block_structure_holds_on_random_codes) {
    std::mt19937_64 rng(31);
    for (int n : {5, 7}) {
        std::vector<ErrorOp> errors = named_error_set("onebit", n);
        std::vector<SignClass> classes = classes_of(errors);
        std::vector<RepSector> sectors = symmetrized_sectors(n);
        for (int trial = 0; trial < 10; trial++) {
            DickeCode code = random_code(n, rng);
            KLReport r = kl_matrices(code, errors);
            auto v = block_structure_check(r, classes, sectors);
            ASSERT_TRUE(v.empty()) << v.front().rule << " " << v.front().matrix << " " << v.front().magnitude;
        }
    }
}

TEST(kl_checker, block_structure_flags_condition_ii_violation) {
    DickeVector c0 = DickeVector::basis(5, 0) + DickeVector::basis(5, 1);
    DickeVector c1 = DickeVector::basis(5, 4) + DickeVector::basis(5, 5);
    DickeCode code = DickeCode::from_words(c0, c1);
    std::vector<ErrorOp> errors = named_error_set("onebit", 5);
    KLReport r = kl_matrices(code, errors);
    ASSERT_FALSE(r.correctable);
    auto v = block_structure_check(r, classes_of(errors), symmetrized_sectors(5));
    ASSERT_FALSE(v.empty());
}

TEST(kl_checker, block_structure_validates_arguments) {
    KLReport r = kl_matrices(catalog_entry("rep3").code, named_error_set("x-single", 3));
    std::vector<SignClass> one{{1, 1}};
    ASSERT_THROW(block_structure_check(r, one), std::invalid_argument);
}

TEST(kl_checker, circulant_blocks) {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 5; trial++) {
        DickeCode code = random_code(7, rng);
        for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
            ASSERT_LT(circulant_deviation(code, p), 1e-10);
        }
    }
}

TEST(kl_checker, exchange_errors_are_degenerate) {
    std::mt19937_64 rng(33);
    DickeCode code = random_code(5, rng);
    KLReport r = kl_matrices(code, named_error_set("exchange", 5));
    ASSERT_TRUE(r.correctable);
    ASSERT_LT((r.D00 - Eigen::MatrixXcd::Ones(11, 11)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(kl_checker, correctability_closed_under_linear_combinations) {
    const DickeCode &code = catalog_entry("code7_plus").code;
    std::vector<ErrorOp> errors = named_error_set("raw-onebit", 7);
    errors.push_back(ops::pauli(Pauli::X, 3) * Complex(0.3, -1) + ops::pauli(Pauli::Z, 6) * 2.0);
    errors.push_back(ops::pauli(Pauli::Y, 1) - ops::pauli(Pauli::Y, 7));
    ASSERT_TRUE(kl_matrices(code, errors).correctable);
}

TEST(kl_checker, ruskai9_exchange_block_rank_one) {
    const DickeCode &code = catalog_entry("ruskai9_plus").code;
    std::vector<ErrorOp> errors = named_error_set("exchange", 9);
    ASSERT_EQ(errors.size(), 37u);
    KLReport r = kl_matrices(code, errors);
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(r.D00);
    auto sv = svd.singularValues();
    ASSERT_NEAR(sv(0), 37.0, 1e-10);
    ASSERT_LT(sv(1), 1e-10);

    std::vector<ErrorOp> full = named_error_set("onebit+exchange", 9);
    ASSERT_EQ(full.size(), 64u);
    std::vector<RepSector> sectors = symmetrized_sectors(9);
    sectors.resize(full.size(), RepSector::trivial);
    KLReport big = kl_matrices(code, full);
    ASSERT_TRUE(big.correctable);
    ASSERT_TRUE(block_structure_check(big, classes_of(full), sectors).empty());
}

TEST(kl_checker, report_json) {
    KLReport r = kl_matrices(catalog_entry("rep3").code, named_error_set("x-single", 3));
    auto j = nlohmann::json::parse(kl_report_json(r));
    ASSERT_EQ(j["n"], 3);
    ASSERT_EQ(j["error_labels"].size(), 4u);
    ASSERT_EQ(j["correctable"], true);
}

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

#include "picodes/full_space.h"

#include <bit>
#include <cmath>
#include <set>
#include <stdexcept>

namespace picodes {

namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > MAX_ORACLE_QUBITS) {
        throw std::out_of_range(
            "DenseState: qubit count " + std::to_string(n) + " outside 1.." + std::to_string(MAX_ORACLE_QUBITS));
    }
}

void check_index(int n, int r) {
    if (r < 1 || r > n) {
        throw std::out_of_range(
            "qubit index " + std::to_string(r) + " outside 1.." + std::to_string(n));
    }
}

}  // namespace

DenseState::DenseState(int n) : n(n) {
    check_qubit_count(n);
    amps.assign(size_t(1) << n, 0.0);
}

DenseState::DenseState(int n, std::vector<Complex> amps) : n(n), amps(std::move(amps)) {
    check_qubit_count(n);
    if (this->amps.size() != (size_t(1) << n)) {
        throw std::invalid_argument("DenseState: amplitude count must be 2^n");
    }
}

DenseState DenseState::basis_string(const std::string &bits) {
    DenseState psi((int)bits.size());
    size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("basis_string: expected only '0' and '1'");
        }
        index = (index << 1) | size_t(c == '1');
    }
    psi.amps[index] = 1.0;
    return psi;
}

Complex DenseState::inner(const DenseState &other) const {
    if (other.n != n) {
        throw std::invalid_argument("DenseState::inner: qubit count mismatch");
    }
    Complex t = 0;
    for (size_t i = 0; i < amps.size(); i++) {
        t += std::conj(amps[i]) * other.amps[i];
    }
    return t;
}

double DenseState::norm() const {
    double t = 0;
    for (const auto &a : amps) {
        t += std::norm(a);
    }
    return std::sqrt(t);
}

DenseState DenseState::normalized() const {
    double m = norm();
    if (m == 0) {
        throw std::domain_error("DenseState::normalized: zero vector");
    }
    return scaled(1.0 / m);
}

DenseState DenseState::scaled(Complex factor) const {
    DenseState out = *this;
    for (auto &a : out.amps) {
        a *= factor;
    }
    return out;
}

DenseState DenseState::operator+(const DenseState &other) const {
    if (other.n != n) {
        throw std::invalid_argument("DenseState: qubit count mismatch");
    }
    DenseState out = *this;
    for (size_t i = 0; i < amps.size(); i++) {
        out.amps[i] += other.amps[i];
    }
    return out;
}

DenseState DenseState::operator-(const DenseState &other) const {
    return *this + other.scaled(-1.0);
}

double DenseState::distance(const DenseState &other) const {
    return (*this - other).norm();
}

ErrorOp::ErrorOp(std::string label, std::vector<OpTerm> terms)
    : label_(std::move(label)), terms_(std::move(terms)) {
}

ErrorOp ErrorOp::with_label(std::string label) const {
    return ErrorOp(std::move(label), terms_);
}

int ErrorOp::max_qubit() const {
    int m = 0;
    for (const auto &t : terms_) {
        if (auto w = std::get_if<PauliWord>(&t.op)) {
            for (const auto &[q, p] : w->factors) {
                m = std::max(m, q);
            }
        } else if (auto p = std::get_if<PairOp>(&t.op)) {
            m = std::max({m, p->r, p->s});
        }
    }
    return m;
}

ErrorOp ErrorOp::operator+(const ErrorOp &other) const {
    std::vector<OpTerm> terms = terms_;
    terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
    return ErrorOp("(" + label_ + "+" + other.label_ + ")", std::move(terms));
}

ErrorOp ErrorOp::operator-(const ErrorOp &other) const {
    return *this + other * -1.0;
}

ErrorOp ErrorOp::operator*(Complex factor) const {
    std::vector<OpTerm> terms = terms_;
    for (auto &t : terms) {
        t.coeff *= factor;
    }
    return ErrorOp(label_, std::move(terms));
}

namespace ops {

ErrorOp identity() {
    return ErrorOp("I", {{1.0, IdentityOp{}}});
}

ErrorOp pauli(Pauli p, int r) {
    if (r < 1) {
        throw std::out_of_range("pauli: qubit index must be >= 1");
    }
    return ErrorOp(std::string(1, char(p)) + std::to_string(r), {{1.0, PauliWord{{{r, p}}}}});
}

ErrorOp pauli_word(const std::string &word) {
    PauliWord w;
    for (size_t j = 0; j < word.size(); j++) {
        char c = word[j];
        if (c == 'I' || c == '_') {
            continue;
        }
        if (c != 'X' && c != 'Y' && c != 'Z') {
            throw std::invalid_argument("pauli_word: unexpected character '" + std::string(1, c) + "'");
        }
        w.factors.push_back({(int)j + 1, Pauli(c)});
    }
    if (w.factors.empty()) {
        return identity().with_label(word);
    }
    return ErrorOp(word, {{1.0, w}});
}

ErrorOp pauli_pair(Pauli p, int r, int s) {
    if (r == s) {
        throw std::invalid_argument("pauli_pair: requires r != s");
    }
    if (r < 1 || s < 1) {
        throw std::out_of_range("pauli_pair: qubit index must be >= 1");
    }
    std::string c(1, char(p));
    return ErrorOp(c + std::to_string(r) + c + std::to_string(s), {{1.0, PauliWord{{{r, p}, {s, p}}}}});
}

ErrorOp pair(PairKind kind, int r, int s) {
    if (r == s) {
        throw std::invalid_argument("pair: requires r != s");
    }
    if (r < 1 || s < 1) {
        throw std::out_of_range("pair: qubit index must be >= 1");
    }
    return ErrorOp(
        std::string(1, char(kind)) + std::to_string(r) + "," + std::to_string(s), {{1.0, PairOp{kind, r, s}}});
}

ErrorOp average(Pauli p, int n) {
    std::vector<OpTerm> terms;
    for (int r = 1; r <= n; r++) {
        terms.push_back({1.0 / n, PauliWord{{{r, p}}}});
    }
    return ErrorOp(std::string("avg") + char(p), std::move(terms));
}

ErrorOp difference(Pauli p, int r, int s) {
    if (r == s) {
        throw std::invalid_argument("difference: requires r != s");
    }
    std::string c(1, char(p));
    return ErrorOp(
        c + std::to_string(r) + "-" + c + std::to_string(s),
        {{1.0, PauliWord{{{r, p}}}}, {-1.0, PauliWord{{{s, p}}}}});
}

ErrorOp average_double(Pauli p, int n) {
    if (n < 2) {
        throw std::invalid_argument("average_double: requires n >= 2");
    }
    std::vector<OpTerm> terms;
    double w = 2.0 / (double(n) * (n - 1));
    for (int r = 1; r <= n; r++) {
        for (int s = r + 1; s <= n; s++) {
            terms.push_back({w, PauliWord{{{r, p}, {s, p}}}});
        }
    }
    return ErrorOp(std::string("avg") + char(p) + char(p), std::move(terms));
}

ErrorOp all_qubits(Pauli p, int n) {
    PauliWord w;
    for (int r = 1; r <= n; r++) {
        w.factors.push_back({r, p});
    }
    return ErrorOp(std::string(size_t(n), char(p)), {{1.0, w}});
}

}  // namespace ops

namespace {

void accumulate_word(const PauliWord &w, Complex coeff, const DenseState &psi, DenseState &out) {
    int n = psi.n;
    uint32_t xmask = 0;
    uint32_t zmask = 0;
    int ny = 0;
    std::set<int> seen;
    for (const auto &[q, p] : w.factors) {
        check_index(n, q);
        if (!seen.insert(q).second) {
            throw std::invalid_argument("Pauli word acts twice on qubit " + std::to_string(q));
        }
        uint32_t m = qubit_mask(n, q);
        if (p == Pauli::X || p == Pauli::Y) {
            xmask |= m;
        }
        if (p == Pauli::Z || p == Pauli::Y) {
            zmask |= m;
        }
        if (p == Pauli::Y) {
            ny++;
        }
    }
    // Y = [[0, i], [-i, 0]] = -i X Z, so a word picks up (-i)^{#Y} (-1)^{bits under Z or Y}.
    static const Complex minus_i_powers[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
    Complex base = coeff * minus_i_powers[ny % 4];
    for (uint32_t i = 0; i < psi.amps.size(); i++) {
        Complex a = psi.amps[i];
        if (a == Complex(0)) {
            continue;
        }
        double sign = (std::popcount(i & zmask) & 1) ? -1.0 : 1.0;
        out.amps[i ^ xmask] += base * sign * a;
    }
}

void accumulate_pair(const PairOp &p, Complex coeff, const DenseState &psi, DenseState &out) {
    int n = psi.n;
    check_index(n, p.r);
    check_index(n, p.s);
    if (p.r == p.s) {
        throw std::invalid_argument("pair operator requires r != s");
    }
    uint32_t mr = qubit_mask(n, p.r);
    uint32_t ms = qubit_mask(n, p.s);
    uint32_t both = mr | ms;
    for (uint32_t i = 0; i < psi.amps.size(); i++) {
        Complex a = coeff * psi.amps[i];
        bool br = i & mr;
        bool bs = i & ms;
        bool differ = br != bs;
        switch (p.kind) {
            case PairKind::E:
                out.amps[differ ? i ^ both : i] += a;
                break;
            case PairKind::F:
                if (differ) {
                    out.amps[i ^ both] -= a;
                } else {
                    out.amps[i] += a;
                }
                break;
            case PairKind::G:
                out.amps[differ ? i : i ^ both] += a;
                break;
            case PairKind::H:
                if (differ) {
                    out.amps[i] += a;
                } else {
                    out.amps[i ^ both] -= a;
                }
                break;
        }
    }
}

}  // namespace

DenseState apply(const ErrorOp &op, const DenseState &psi) {
    DenseState out(psi.n);
    for (const auto &t : op.terms()) {
        if (std::holds_alternative<IdentityOp>(t.op)) {
            for (size_t i = 0; i < psi.amps.size(); i++) {
                out.amps[i] += t.coeff * psi.amps[i];
            }
        } else if (auto w = std::get_if<PauliWord>(&t.op)) {
            accumulate_word(*w, t.coeff, psi, out);
        } else {
            accumulate_pair(std::get<PairOp>(t.op), t.coeff, psi, out);
        }
    }
    return out;
}

DenseState embed(const DickeVector &v) {
    DenseState psi(v.n);
    for (uint32_t i = 0; i < psi.amps.size(); i++) {
        psi.amps[i] = v.coeffs[std::popcount(i)];
    }
    return psi;
}

DenseState embed(const VExpansion &e) {
    DenseState psi(e.n);
    uint32_t mr = qubit_mask(e.n, e.r);
    uint32_t ms = qubit_mask(e.n, e.s);
    for (uint32_t i = 0; i < psi.amps.size(); i++) {
        bool br = i & mr;
        bool bs = i & ms;
        if (br == bs) {
            continue;
        }
        int k = std::popcount(i) - 1;
        psi.amps[i] = br ? e.coeffs[k] : -e.coeffs[k];
    }
    return psi;
}

DenseState hadamard_transform(const DenseState &psi) {
    DenseState out = psi;
    const double h = 1.0 / std::sqrt(2.0);
    size_t dim = out.amps.size();
    for (size_t len = 1; len < dim; len <<= 1) {
        for (size_t i = 0; i < dim; i += 2 * len) {
            for (size_t j = i; j < i + len; j++) {
                Complex a = out.amps[j];
                Complex b = out.amps[j + len];
                out.amps[j] = (a + b) * h;
                out.amps[j + len] = (a - b) * h;
            }
        }
    }
    return out;
}

bool permutation_invariance_check(const DenseState &psi, double tol) {
    double scale = std::max(1.0, psi.norm());
    for (int s = 2; s <= psi.n; s++) {
        DenseState moved = apply(ops::pair(PairKind::E, 1, s), psi);
        if (moved.distance(psi) > tol * scale) {
            return false;
        }
    }
    return true;
}

DickeVector project_to_dicke(const DenseState &psi) {
    DickeVector v = DickeVector::zero(psi.n);
    for (uint32_t i = 0; i < psi.amps.size(); i++) {
        v.coeffs[std::popcount(i)] += psi.amps[i];
    }
    for (int k = 0; k <= psi.n; k++) {
        v.coeffs[k] /= binomial_d(psi.n, k);
    }
    return v;
}

DickeCode hadamard_code_map(const DickeCode &code) {
    DenseState h0 = hadamard_transform(embed(code.c0.normalized()));
    DenseState h1 = hadamard_transform(embed(code.c1.normalized()));
    DenseState w0 = h0 + h1;
    DenseState w1 = h0 - h1;
    if (!permutation_invariance_check(w0) || !permutation_invariance_check(w1)) {
        throw std::logic_error("hadamard_code_map: image is not permutation invariant");
    }
    DickeVector c0 = project_to_dicke(w0);
    DickeVector c1 = project_to_dicke(w1);
    if (embed(c0).distance(w0) > 1e-10 || embed(c1).distance(w1) > 1e-10) {
        throw std::logic_error("hadamard_code_map: image not reproduced by its weight-basis projection");
    }
    return DickeCode::from_words(c0.normalized(), c1.normalized());
}

}  // namespace picodes

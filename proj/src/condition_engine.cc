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

#include "picodes/condition_engine.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace picodes {

namespace {

void require_odd(int n, const char *who) {
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument(std::string(who) + ": n must be odd and at least 3");
    }
}

BigRatio ratio(long long num, long long den = 1) {
    return BigRatio(BigInt(num), BigInt(den));
}

BigRatio bin(int n, int k) {
    return BigRatio(binomial(n, k));
}

}  // namespace

Equation::Equation(std::string name, Part part, std::vector<BilinearTerm> terms)
    : name_(std::move(name)), part_(part), terms_(std::move(terms)) {
    weights_.reserve(terms_.size());
    for (const auto &t : terms_) {
        if (t.i < 0 || t.j < 0) {
            throw std::invalid_argument("Equation: negative weight index");
        }
        weights_.push_back(to_double(t.weight));
    }
}

Complex Equation::evaluate(std::span<const Complex> full) const {
    Complex v = 0;
    for (size_t t = 0; t < terms_.size(); t++) {
        const auto &term = terms_[t];
        if (term.i >= (int)full.size() || term.j >= (int)full.size()) {
            throw std::out_of_range("Equation::evaluate: coefficient vector too short for '" + name_ + "'");
        }
        v += weights_[t] * std::conj(full[term.i]) * full[term.j];
    }
    switch (part_) {
        case Part::real_part:
            return v.real();
        case Part::imag_part:
            return v.imag();
        default:
            return v;
    }
}

Equation Equation::canonical() const {
    std::map<std::pair<int, int>, BigRatio> acc;
    for (const auto &t : terms_) {
        int i = t.i;
        int j = t.j;
        BigRatio w = t.weight;
        if (part_ != Part::complex_value && i > j) {
            std::swap(i, j);
            if (part_ == Part::imag_part) {
                w = -w;
            }
        }
        if (part_ == Part::imag_part && i == j) {
            continue;
        }
        acc[{i, j}] += w;
    }
    std::vector<BilinearTerm> out;
    for (const auto &[key, w] : acc) {
        if (w != 0) {
            out.push_back({key.first, key.second, w});
        }
    }
    return Equation(name_, part_, std::move(out));
}

Equation Equation::primitive() const {
    Equation c = canonical();
    if (c.terms_.empty()) {
        return c;
    }
    BigInt g = 0;
    BigInt l = 1;
    for (const auto &t : c.terms_) {
        g = big_gcd(g, abs(numerator(t.weight)));
        l = big_lcm(l, denominator(t.weight));
    }
    BigRatio factor(l, g);
    if (c.terms_.front().weight < 0) {
        factor = -factor;
    }
    return c.scaled(factor);
}

Equation Equation::restricted_to_even() const {
    std::vector<BilinearTerm> out;
    for (const auto &t : terms_) {
        if (t.i % 2 == 0 && t.j % 2 == 0) {
            out.push_back(t);
        }
    }
    return Equation(name_, part_, std::move(out));
}

Equation Equation::scaled(const BigRatio &factor) const {
    std::vector<BilinearTerm> out = terms_;
    for (auto &t : out) {
        t.weight *= factor;
    }
    return Equation(name_, part_, std::move(out));
}

Equation Equation::renamed(std::string name) const {
    return Equation(std::move(name), part_, terms_);
}

Equation Equation::with_part(Part part) const {
    return Equation(name_, part, terms_);
}

BigRatio Equation::coefficient(int i, int j) const {
    BigRatio sign = 1;
    if (part_ != Part::complex_value && i > j) {
        std::swap(i, j);
        if (part_ == Part::imag_part) {
            sign = -1;
        }
    }
    for (const auto &t : canonical().terms_) {
        if (t.i == i && t.j == j) {
            return sign * t.weight;
        }
    }
    return 0;
}

bool Equation::proportional_to(const Equation &other, BigRatio *scale) const {
    if (part_ != other.part_) {
        return false;
    }
    Equation a = canonical();
    Equation b = other.canonical();
    if (a.terms_.size() != b.terms_.size() || a.terms_.empty()) {
        return a.terms_.empty() && b.terms_.empty();
    }
    BigRatio s = a.terms_[0].weight / b.terms_[0].weight;
    for (size_t t = 0; t < a.terms_.size(); t++) {
        if (a.terms_[t].i != b.terms_[t].i || a.terms_[t].j != b.terms_[t].j) {
            return false;
        }
        if (a.terms_[t].weight != s * b.terms_[t].weight) {
            return false;
        }
    }
    if (scale) {
        *scale = s;
    }
    return true;
}

std::string Equation::to_string() const {
    std::ostringstream out;
    const char *open = part_ == Part::real_part ? "Re[" : part_ == Part::imag_part ? "Im[" : "";
    out << name_ << ": " << open;
    Equation c = canonical();
    bool first = true;
    for (const auto &t : c.terms_) {
        BigRatio w = t.weight;
        if (!first) {
            out << (w < 0 ? " - " : " + ");
            w = abs(w);
        } else if (w < 0) {
            out << "-";
            w = -w;
        }
        first = false;
        if (w != 1) {
            out << w << " ";
        }
        if (t.i == t.j && part_ != Part::complex_value) {
            out << "|a" << t.i << "|^2";
        } else {
            out << "conj(a" << t.i << ") a" << t.j;
        }
    }
    if (first) {
        out << "0";
    }
    out << (*open ? "]" : "") << " = 0";
    return out.str();
}

Equation combine(std::string name, const BigRatio &a, const Equation &e1, const BigRatio &b, const Equation &e2) {
    if (e1.part() != e2.part()) {
        throw std::invalid_argument("combine: equations constrain different parts");
    }
    std::vector<BilinearTerm> terms;
    for (const auto &t : e1.terms()) {
        terms.push_back({t.i, t.j, a * t.weight});
    }
    for (const auto &t : e2.terms()) {
        terms.push_back({t.i, t.j, b * t.weight});
    }
    return Equation(std::move(name), e1.part(), std::move(terms)).canonical();
}

Equation eliminate(std::string name, const Equation &e1, const Equation &e2, int i, int j) {
    BigRatio c1 = e1.coefficient(i, j);
    BigRatio c2 = e2.coefficient(i, j);
    if (c1 == 0 && c2 == 0) {
        throw std::invalid_argument("eliminate: monomial absent from both equations");
    }
    return combine(std::move(name), c2, e1, -c1, e2).primitive();
}

Complex ConditionResidual::value(const std::string &name) const {
    for (size_t e = 0; e < names.size(); e++) {
        if (names[e] == name) {
            return raw[e];
        }
    }
    throw std::out_of_range("ConditionResidual: no equation named '" + name + "'");
}

double ConditionResidual::scale_free_value(const std::string &name) const {
    for (size_t e = 0; e < names.size(); e++) {
        if (names[e] == name) {
            return scale_free[e];
        }
    }
    throw std::out_of_range("ConditionResidual: no equation named '" + name + "'");
}

std::vector<Complex> expand_even(int n, std::span<const Complex> even_coeffs) {
    if ((int)even_coeffs.size() != (n + 1) / 2) {
        throw std::invalid_argument(
            "expected " + std::to_string((n + 1) / 2) + " even-weight coefficients, got " +
            std::to_string(even_coeffs.size()));
    }
    std::vector<Complex> full(n + 1, 0.0);
    for (size_t m = 0; m < even_coeffs.size(); m++) {
        full[2 * m] = even_coeffs[m];
    }
    return full;
}

ConditionResidual ConditionSystem::evaluate(std::span<const Complex> even_coeffs) const {
    std::vector<Complex> full = expand_even(n, even_coeffs);
    return evaluate_full(full);
}

ConditionResidual ConditionSystem::evaluate_full(std::span<const Complex> full) const {
    if ((int)full.size() != n + 1) {
        throw std::invalid_argument("ConditionSystem: expected n+1 coefficients");
    }
    ConditionResidual r;
    r.system = name;
    for (int k = 0; k <= n; k++) {
        r.norm += std::norm(full[k]) * binomial_d(n, k);
    }
    for (const auto &eq : equations) {
        Complex v = eq.evaluate(full);
        double sf = r.norm > 0 ? std::abs(v) / r.norm : 0.0;
        r.names.push_back(eq.name());
        r.raw.push_back(v);
        r.scale_free.push_back(sf);
        r.max_abs = std::max(r.max_abs, std::abs(v));
        r.max_scale_free = std::max(r.max_scale_free, sf);
    }
    return r;
}

const Equation &ConditionSystem::equation(const std::string &eq_name) const {
    for (const auto &eq : equations) {
        if (eq.name() == eq_name) {
            return eq;
        }
    }
    throw std::out_of_range("ConditionSystem " + name + ": no equation named '" + eq_name + "'");
}

ConditionSystem ConditionSystem::subset(std::string new_name, const std::vector<std::string> &keep) const {
    ConditionSystem out{std::move(new_name), n, {}};
    for (const auto &k : keep) {
        out.equations.push_back(equation(k));
    }
    return out;
}

std::vector<Equation> averaged_block_forms(int n) {
    require_odd(n, "averaged_block_forms");
    std::vector<BilinearTerm> s1, s2, sz, d1, d2, dz;
    for (int k = 0; k <= n; k++) {
        BigRatio c = bin(n, k);
        long long m = n - 2 * k;
        long long zz = m * m - n;
        if (k >= 1) {
            int j = n - k + 1;
            s1.push_back({k, j, ratio(k) * c});
            s2.push_back({k, j, ratio(m * k) * c});
            sz.push_back({k, j, ratio(zz * k) * c});
        }
        if (k <= n - 1) {
            int j = n - k - 1;
            d1.push_back({k, j, ratio(n - k) * c});
            d2.push_back({k, j, ratio(m * (n - k)) * c});
            dz.push_back({k, j, ratio(zz * (n - k)) * c});
        }
    }
    Part p = Part::complex_value;
    return {
        Equation("sum1a", p, s1),
        Equation("sum2a", p, s2),
        Equation("XYp.ZZ", p, sz),
        Equation("diff1a", p, d1),
        Equation("diff2a", p, d2),
        Equation("XYm.ZZ", p, dz),
    };
}

namespace {

const Equation &find(const std::vector<Equation> &eqs, const std::string &name) {
    for (const auto &e : eqs) {
        if (e.name() == name) {
            return e;
        }
    }
    throw std::out_of_range("no equation named " + name);
}

Equation iz_form(int n, std::string name) {
    std::vector<BilinearTerm> t;
    for (int k = 0; k <= n; k++) {
        t.push_back({k, k, ratio(n - 2 * k) * bin(n, k)});
    }
    return Equation(std::move(name), Part::real_part, t).restricted_to_even().canonical();
}

Equation z_zz_form(int n, std::string name) {
    std::vector<BilinearTerm> t;
    for (int k = 0; k <= n; k++) {
        long long m = n - 2 * k;
        t.push_back({k, k, ratio(m * (m * m - n)) * bin(n, k)});
    }
    return Equation(std::move(name), Part::real_part, t).restricted_to_even().canonical();
}

Equation xy_form(int n, std::string name) {
    std::vector<BilinearTerm> t;
    for (int k = 1; k <= n - 1; k++) {
        t.push_back({k + 1, k - 1, bin(n - 2, k - 1)});
    }
    return Equation(std::move(name), Part::imag_part, t).restricted_to_even().canonical();
}

}  // namespace

ConditionSystem theorem1_system(int n) {
    require_odd(n, "theorem1_system");
    std::vector<BilinearTerm> red1, red2, skew;
    int hp = (n + 1) / 2;
    int hm = (n - 1) / 2;
    if (hp % 2 == 0) {
        red1.push_back({hp, hp, ratio(hp) * bin(n, hp)});
    }
    for (int m = 1; m <= (n - 1) / 4; m++) {
        red1.push_back({2 * m, n - 2 * m + 1, ratio(2 * 2 * m) * bin(n, 2 * m)});
    }
    if (hm % 2 == 0) {
        red2.push_back({hm, hm, ratio(hp) * bin(n, hm)});
    }
    for (int m = 0; m <= (n - 3) / 4; m++) {
        red2.push_back({2 * m, n - 2 * m - 1, ratio(2 * (n - 2 * m)) * bin(n, 2 * m)});
    }
    for (int m = 0; m <= (n - 1) / 2; m++) {
        skew.push_back({2 * m, 2 * m, ratio(n - 4 * m) * bin(n, 2 * m)});
    }
    return ConditionSystem{
        "theorem1",
        n,
        {
            Equation("crs01.red1", Part::real_part, red1).canonical(),
            Equation("crs01.red2", Part::real_part, red2).canonical(),
            Equation("skew2", Part::real_part, skew).canonical(),
        }};
}

ConditionSystem appendixC_system(int n) {
    require_odd(n, "appendixC_system");
    std::vector<BilinearTerm> sre, dre, sim, dim;
    int hp = (n + 1) / 2;
    int hm = (n - 1) / 2;
    sre.push_back({hp, hp, ratio(hp) * bin(n, hp)});
    for (int k = 1; k <= (n - 1) / 2; k++) {
        sre.push_back({k, n - k + 1, ratio(2 * k) * bin(n, k)});
    }
    dre.push_back({hm, hm, ratio(hp) * bin(n, hm)});
    for (int k = 0; k <= (n - 3) / 2; k++) {
        dre.push_back({k, n - k - 1, ratio(2 * (n - k)) * bin(n, k)});
    }
    for (int k = 1; k <= (n - 1) / 2; k++) {
        sim.push_back({k, n - k + 1, ratio(k * (n - 2 * k + 1)) * bin(n, k)});
    }
    for (int k = 0; k <= (n - 1) / 2; k++) {
        dim.push_back({k, n - k - 1, ratio((n - k) * (n - 2 * k - 1)) * bin(n, k)});
    }
    auto fin = [](Equation e) {
        return e.restricted_to_even().canonical();
    };
    return ConditionSystem{
        "appendixC",
        n,
        {
            fin(Equation("sum.re", Part::real_part, sre)),
            fin(Equation("diff.re", Part::real_part, dre)),
            fin(Equation("sum.im", Part::imag_part, sim)),
            fin(Equation("diff.im", Part::imag_part, dim)),
            iz_form(n, "IZcomp"),
            xy_form(n, "XYcomp"),
        }};
}

ConditionSystem phase_double_system(int n) {
    require_odd(n, "phase_double_system");
    return ConditionSystem{"phase_double", n, {iz_form(n, "Z1Z2"), z_zz_form(n, "ZandZZ")}};
}

ConditionSystem nine_bit_double_system_def() {
    const int n = 9;
    std::vector<Equation> raw = averaged_block_forms(n);
    auto even = [&](const std::string &name) {
        return find(raw, name).restricted_to_even();
    };
    Equation dbm_a = even("diff1a").with_part(Part::real_part).primitive();
    Equation dbm_b = even("XYm.ZZ").with_part(Part::real_part).primitive();
    return ConditionSystem{
        "nine_bit_double",
        n,
        {
            even("sum1a").primitive().renamed("dbp.a"),
            even("sum2a").primitive().renamed("dbp.b"),
            even("XYp.ZZ").primitive().renamed("dbp.c"),
            eliminate("eqa6alt.a", dbm_a, dbm_b, 2, 6),
            eliminate("eqa6alt.b", dbm_a, dbm_b, 0, 8),
            even("diff2a").with_part(Part::imag_part).primitive().renamed("dbm.alt.c"),
            iz_form(n, "dZZa").primitive(),
            z_zz_form(n, "dbIZZ").primitive(),
            xy_form(n, "ImXY").primitive(),
        }};
}

ConditionSystem xz_double_system(int n) {
    require_odd(n, "xz_double_system");
    std::vector<Equation> raw = averaged_block_forms(n);
    auto even = [&](const std::string &name) {
        return find(raw, name).restricted_to_even();
    };
    BigRatio one = 1;
    return ConditionSystem{
        "xz_double",
        n,
        {
            combine("bIX", one, even("sum1a"), one, even("diff1a")).with_part(Part::real_part).primitive(),
            combine("bZX", one, even("sum2a"), one, even("diff2a")).primitive(),
            combine("bZZ,X", one, even("XYp.ZZ"), one, even("XYm.ZZ")).primitive(),
            iz_form(n, "dZZa").primitive(),
            z_zz_form(n, "dbIZZ").primitive(),
        }};
}

ConditionResidual theorem1_residuals(int n, std::span<const double> a) {
    std::vector<Complex> c(a.begin(), a.end());
    return theorem1_system(n).evaluate(c);
}

ConditionResidual appendixC_residuals(int n, std::span<const Complex> a) {
    return appendixC_system(n).evaluate(a);
}

ConditionResidual phase_double_residuals(int n, std::span<const Complex> a) {
    return phase_double_system(n).evaluate(a);
}

ConditionResidual nine_bit_double_system(std::span<const Complex> a) {
    static const ConditionSystem sys = nine_bit_double_system_def();
    return sys.evaluate(a);
}

std::string Polynomial::to_string() const {
    std::ostringstream out;
    out << name << ": ";
    bool first = true;
    for (const auto &[key, c] : coeffs) {
        BigInt w = c;
        if (!first) {
            out << (w < 0 ? " - " : " + ");
            w = abs(w);
        } else if (w < 0) {
            out << "-";
            w = -w;
        }
        first = false;
        if (w != 1) {
            out << w << "*";
        }
        if (key.first == key.second) {
            out << "a" << key.first << "^2";
        } else {
            out << "a" << key.first << "*a" << key.second;
        }
    }
    if (first) {
        out << "0";
    }
    out << " = 0";
    return out.str();
}

bool Polynomial::proportional_to(const Polynomial &other) const {
    if (coeffs.size() != other.coeffs.size() || coeffs.empty()) {
        return coeffs.empty() && other.coeffs.empty();
    }
    auto it = coeffs.begin();
    auto jt = other.coeffs.begin();
    BigRatio s(it->second, jt->second);
    for (; it != coeffs.end(); ++it, ++jt) {
        if (it->first != jt->first || BigRatio(it->second) != s * BigRatio(jt->second)) {
            return false;
        }
    }
    return true;
}

Polynomial polynomial_from(const Equation &eq) {
    if (eq.part() == Part::imag_part) {
        throw std::invalid_argument("polynomial_from: imaginary-part equations vanish on real inputs");
    }
    Equation p = eq.with_part(Part::real_part).primitive();
    Polynomial out{eq.name(), {}};
    for (const auto &t : p.terms()) {
        if (denominator(t.weight) != 1) {
            throw std::logic_error("polynomial_from: primitive form is not integral");
        }
        out.coeffs[{t.i, t.j}] = numerator(t.weight);
    }
    return out;
}

std::vector<Polynomial> specialize_theorem1(int n) {
    std::vector<Polynomial> out;
    for (const auto &eq : theorem1_system(n).equations) {
        out.push_back(polynomial_from(eq));
    }
    return out;
}

Equation double_phase_block_equation(int n) {
    require_odd(n, "double_phase_block_equation");
    std::vector<BilinearTerm> t;
    for (int m = 0; 2 * m <= n; m++) {
        t.push_back({2 * m, 2 * m, ratio(4 * m - n, n - 2) * bin(n - 2, 2 * m - 1)});
    }
    return Equation("AppZtZs", Part::real_part, t).canonical();
}

BlockRedundancy block_redundancy_check(int n, std::span<const Complex> a, double tol) {
    Equation block = double_phase_block_equation(n);
    ConditionSystem phase = phase_double_system(n);
    Equation rhs = combine(
        "identity", 1, phase.equation("ZandZZ"), -ratio((long long)n * n - n), phase.equation("Z1Z2"));
    BigRatio scale = ratio(4LL * n * (n - 1) * (n - 2));
    Equation lhs = block.scaled(scale);
    BigRatio s;
    bool identity = lhs.proportional_to(rhs, &s) && s == 1;
    ConditionSystem sys{"block", n, {block}};
    ConditionResidual r = sys.evaluate(a);
    BlockRedundancy out;
    out.block_value = r.scale_free[0];
    out.identity_holds = identity;
    out.redundant = identity && out.block_value <= tol;
    return out;
}

std::optional<Complex> dbp_equivalence(std::span<const Complex> a, double tol) {
    if (a.size() != 5) {
        throw std::invalid_argument("dbp_equivalence: expected 5 coefficients");
    }
    ConditionResidual r = nine_bit_double_system(a);
    for (const char *name : {"dbp.a", "dbp.b", "dbp.c"}) {
        if (r.scale_free_value(name) > tol) {
            return std::nullopt;
        }
    }
    const Complex i(0, 1);
    Complex nu = i * std::conj(a[1]) * a[4];
    double scale = std::max(r.norm, 1e-300);
    if (std::abs(nu.imag()) > tol * scale) {
        return std::nullopt;
    }
    if (std::abs(std::conj(a[2]) * a[3] - (3.0 / 7.0) * i * nu) > tol * scale) {
        return std::nullopt;
    }
    return Complex(nu.real(), 0.0);
}

}  // namespace picodes

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

#include "picodes/code_file.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace picodes {

namespace {

using nlohmann::json;

double parse_decimal(const json &v, const std::string &where) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (!v.is_string()) {
        throw CodeFileError(where + ": expected a decimal string");
    }
    try {
        PrecisionScope scope(DEFAULT_PRECISION_DIGITS);
        return HighFloat(v.get<std::string>()).convert_to<double>();
    } catch (const std::exception &) {
        throw CodeFileError(where + ": cannot parse '" + v.get<std::string>() + "'");
    }
}

DickeVector parse_word(const json &list, int n, const std::string &name) {
    if (!list.is_array()) {
        throw CodeFileError("'" + name + "' must be a list of {k, re, im}");
    }
    DickeVector v = DickeVector::zero(n);
    std::vector<bool> seen(n + 1, false);
    for (const auto &item : list) {
        if (!item.is_object() || !item.contains("k") || !item["k"].is_number_integer()) {
            throw CodeFileError("'" + name + "' entries need an integer 'k'");
        }
        int k = item["k"].get<int>();
        if (k < 0 || k > n) {
            throw CodeFileError("'" + name + "': weight " + std::to_string(k) + " out of range");
        }
        if (seen[k]) {
            throw CodeFileError("'" + name + "': weight " + std::to_string(k) + " listed twice");
        }
        seen[k] = true;
        std::string where = name + "[k=" + std::to_string(k) + "]";
        double re = item.contains("re") ? parse_decimal(item["re"], where + ".re") : 0.0;
        double im = item.contains("im") ? parse_decimal(item["im"], where + ".im") : 0.0;
        v.coeffs[k] = Complex(re, im);
    }
    return v;
}

json word_json(const DickeVector &v, const std::vector<std::string> &re, const std::vector<std::string> &im,
               const std::vector<std::string> &symbolic, bool mirror) {
    json out = json::array();
    for (int k = 0; k <= v.n; k++) {
        if (v.coeffs[k] == Complex(0, 0)) {
            continue;
        }
        int m = (mirror ? v.n - k : k) / 2;
        json item{{"k", k}};
        if (!re.empty()) {
            item["re"] = re[m];
            item["im"] = im[m];
        } else {
            std::ostringstream r, i;
            r.precision(17);
            i.precision(17);
            r << v.coeffs[k].real();
            i << v.coeffs[k].imag();
            item["re"] = r.str();
            item["im"] = i.str();
        }
        if (m < (int)symbolic.size() && !symbolic[m].empty()) {
            item["symbolic"] = symbolic[m];
        }
        out.push_back(item);
    }
    return out;
}

std::string render(const std::string &id, const DickeCode &code, const std::vector<std::string> &re,
                   const std::vector<std::string> &im, const std::vector<std::string> &symbolic) {
    json j{
        {"format", CODE_FILE_FORMAT},
        {"id", id},
        {"n", code.n},
        {"c0", word_json(code.c0, re, im, symbolic, false)},
        {"c1", word_json(code.c1, re, im, symbolic, true)},
    };
    return j.dump(2) + "\n";
}

}  // namespace

CodeFile parse_code_file(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw CodeFileError(std::string("code file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw CodeFileError("code file must be a JSON object");
    }
    if (j.contains("format") && j["format"] != CODE_FILE_FORMAT) {
        throw CodeFileError("unsupported code file format " + j["format"].dump());
    }
    if (!j.contains("n") || !j["n"].is_number_integer()) {
        throw CodeFileError("code file needs an integer 'n'");
    }
    int n = j["n"].get<int>();
    if (n < 1 || n > 30) {
        throw CodeFileError("'n' out of range");
    }
    if (!j.contains("c0")) {
        throw CodeFileError("code file needs 'c0'");
    }
    DickeVector c0 = parse_word(j["c0"], n, "c0");
    DickeVector c1 = DickeVector::zero(n);
    if (j.contains("c1")) {
        c1 = parse_word(j["c1"], n, "c1");
    } else {
        for (int k = 0; k <= n; k++) {
            c1.coeffs[n - k] = c0.coeffs[k];
        }
    }
    if (c0.norm() == 0 || c1.norm() == 0) {
        throw CodeFileError("code words must be nonzero");
    }
    try {
        return {j.value("id", std::string("unnamed")), DickeCode::from_words(c0, c1)};
    } catch (const std::invalid_argument &e) {
        throw CodeFileError(e.what());
    }
}

CodeFile load_code_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw CodeFileError("cannot open code file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_code_file(buf.str());
}

std::string code_file_text(const CatalogEntry &entry) {
    return render(entry.id, entry.code, entry.exact_re, entry.exact_im, entry.symbolic);
}

std::string code_file_text(const std::string &id, const DickeCode &code) {
    return render(id, code, {}, {}, {});
}

}  // namespace picodes

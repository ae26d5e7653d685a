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

#ifndef _PICODES_CODE_FILE_H
#define _PICODES_CODE_FILE_H

#include <stdexcept>
#include <string>
#include <vector>

#include "picodes/code_workshop.h"

namespace picodes {

/// JSON code file:
///   {"format": "picodes-code/1", "id": ..., "n": 7,
///    "c0": [{"k": 0, "re": "2.236...", "im": "0", "symbolic": "sqrt(5)"}, ...],
///    "c1": [...]}
/// Coefficients refer to the unnormalized weight basis. "c1" may be omitted,
/// in which case c1 is the bit-flip mirror of c0. Symbolic strings are
/// documentation only.
constexpr const char *CODE_FILE_FORMAT = "picodes-code/1";

class CodeFileError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct CodeFile {
    std::string id;
    DickeCode code;
};

CodeFile parse_code_file(const std::string &text);
CodeFile load_code_file(const std::string &path);

std::string code_file_text(const CatalogEntry &entry);
std::string code_file_text(const std::string &id, const DickeCode &code);

}  // namespace picodes

#endif

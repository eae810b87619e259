// Copyright 2026 The dircode Authors
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

#ifndef DIRCODE_IO_H
#define DIRCODE_IO_H

#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "dircode/qc.h"
#include "dircode/search.h"
#include "dircode/torus.h"
#include "dircode/word.h"

namespace dircode {

/// {"kind": "exact" | "greater_than" | "not_defined", "value": int | null}
nlohmann::json to_json(const DistanceResult &d);
nlohmann::json to_json(Vec2 v);
nlohmann::json to_json(const ScanRecord &r);

nlohmann::json analyze_report(const DirectionWord &w, const std::optional<CheckerboardTorus> &t);
nlohmann::json build_report(const CodeInstance &c);
nlohmann::json params_report(const CodeInstance &c, const CodeParameters &p, size_t w_max);
nlohmann::json qc_report(const DirectionWord &w, const CheckerboardTorus &t);

/// "word,w,n,k,dX,dZ,support", plus ",layout" when requested.
std::string scan_csv_header(bool with_layout);
std::string scan_csv_row(const ScanRecord &r, bool with_layout);

/// Parses "(x,y) (x,y) ..." (commas or whitespace between pairs).
std::vector<Vec2> parse_offsets(const std::string &text);

class ConfigError : public std::runtime_error {
   public:
    ConfigError(const std::string &message, size_t line);
    size_t line() const {
        return line_;
    }

   private:
    size_t line_;
};

/// key=value lines with '#' comments, applied on top of `base`. Keys:
/// min_len, max_len, lx, ly, layout (row-alt | all-coset), wmax, fix_first_n,
/// no_backtrack, distinct_offsets, include_cyclic, strict_wrap, max_cosets,
/// threads.
ScanConfig parse_scan_config(std::istream &in, ScanConfig base = {});

}  // namespace dircode

#endif

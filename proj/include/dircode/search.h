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

#ifndef DIRCODE_SEARCH_H
#define DIRCODE_SEARCH_H

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "dircode/torus.h"
#include "dircode/word.h"

namespace dircode {

enum class LayoutRule {
    RowAlternating,
    /// Every coset-constant layout of the word's lattice (plus torus periods),
    /// one per translation class.
    AllCosetConstant,
};

struct ScanConfig {
    size_t min_len = 4;
    size_t max_len = 8;
    CheckerboardTorus torus{16, 8};
    LayoutRule layout_rule = LayoutRule::RowAlternating;
    size_t w_max = 4;
    bool fix_first_n = true;
    bool no_backtrack = true;
    /// |P(W)| = w with no repeated offsets.
    bool distinct_offsets = false;
    /// Quotient by cyclic shifts as well. Cyclic shifts need not preserve
    /// commutation under a fixed layout, so this is off by default.
    bool include_cyclic = false;
    bool strict_wrap = false;
    /// Words whose layout lattice has more ancilla cosets are rejected under
    /// AllCosetConstant.
    size_t max_cosets = 6;
    /// Worker threads for scan(); <= 0 uses the OpenMP default.
    int threads = 0;
};

struct ScanRecord {
    /// Compressed canonical word.
    std::string word;
    size_t w = 0;
    size_t n = 0;
    size_t k = 0;
    DistanceResult dx;
    DistanceResult dz;
    /// Offsets surviving mod-2 cancellation on the plane.
    size_t support = 0;
    std::string layout;

    bool operator==(const ScanRecord &) const = default;
};

struct Rejected {
    std::string word;
    std::string layout;
    std::string reason;
};

using Evaluation = std::variant<ScanRecord, Rejected>;

/// One canonical representative per class, ordered by length then letters.
std::vector<DirectionWord> enumerate_words(const ScanConfig &cfg);

/// Evaluates the word under an explicit layout. `threads` goes to the
/// distance kernel.
Evaluation evaluate_word(const DirectionWord &w, const ScanConfig &cfg, const Layout &layout, int threads = 0);

/// Evaluates the word under cfg.layout_rule: one evaluation for row
/// alternation, one per canonical coset-constant layout otherwise.
std::vector<Evaluation> evaluate_word(const DirectionWord &w, const ScanConfig &cfg, int threads = 0);

/// Sort key: min-distance screen descending (">d" above "d", undefined last),
/// then k descending, w ascending, word, layout.
bool scan_order(const ScanRecord &a, const ScanRecord &b);

/// Serial reference scan.
std::vector<ScanRecord> scan_serial(const ScanConfig &cfg);

/// Words evaluated in parallel, merged and sorted. Output is identical to
/// scan_serial for every thread count.
std::vector<ScanRecord> scan(const ScanConfig &cfg);

}  // namespace dircode

#endif

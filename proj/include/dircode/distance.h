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

#ifndef DIRCODE_DISTANCE_H
#define DIRCODE_DISTANCE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dircode/gf2.h"

namespace dircode {

/// Low-weight logical search for one Pauli type.
///
/// Looks for x with check * x = 0 and x outside row(stabilizers). Row
/// membership is tested through the dual: x is in row(S) iff x is orthogonal
/// to ker(S), and for x already in ker(check) only a complement of row(check)
/// inside ker(S) matters. Each column j therefore carries a packed syndrome
/// (check column j | logical-parity bits of j).
class LogicalSearch {
   public:
    /// For d_X pass (H_Z, H_X); for d_Z pass (H_X, H_Z).
    LogicalSearch(const BitMatrix &check, const BitMatrix &stabilizers);

    size_t n() const {
        return n_;
    }
    /// Number of logical-parity bits (k of the code when it commutes).
    size_t logical_count() const {
        return logical_count_;
    }
    size_t check_words() const {
        return check_words_;
    }
    size_t logical_words() const {
        return logical_words_;
    }
    const uint64_t *check_part(size_t col) const {
        return columns_.data() + col * stride();
    }
    const uint64_t *logical_part(size_t col) const {
        return check_part(col) + check_words_;
    }
    size_t stride() const {
        return check_words_ + logical_words_;
    }

   private:
    size_t n_ = 0;
    size_t logical_count_ = 0;
    size_t check_words_ = 0;
    size_t logical_words_ = 0;
    std::vector<uint64_t> columns_;
};

struct LogicalHit {
    size_t weight = 0;
    /// Lexicographically first support of minimum weight.
    std::vector<size_t> support;
};

/// Serial reference: plain enumeration of supports in increasing weight and
/// lexicographic order. Kept for testing the fast kernel.
std::optional<LogicalHit> find_min_logical_reference(const LogicalSearch &s, size_t w_max);

/// Same result as the reference. The last support index is found by syndrome
/// lookup instead of a loop, and subtrees rooted at each first index run in
/// parallel. threads <= 0 uses the OpenMP default.
std::optional<LogicalHit> find_min_logical(const LogicalSearch &s, size_t w_max, int threads = 0);

}  // namespace dircode

#endif

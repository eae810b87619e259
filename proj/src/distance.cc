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

#include "dircode/distance.h"

#include <omp.h>

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace dircode {

namespace {

bool any_set(const uint64_t *w, size_t n) {
    for (size_t i = 0; i < n; i++) {
        if (w[i]) {
            return true;
        }
    }
    return false;
}

void xor_into(uint64_t *dst, const uint64_t *a, const uint64_t *b, size_t n) {
    for (size_t i = 0; i < n; i++) {
        dst[i] = a[i] ^ b[i];
    }
}

uint64_t hash_words(const uint64_t *w, size_t n) {
    uint64_t h = 0x243f6a8885a308d3ULL;
    for (size_t i = 0; i < n; i++) {
        uint64_t z = w[i] + 0x9e3779b97f4a7c15ULL + h;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        h = z ^ (z >> 31);
    }
    return h;
}

/// Reduces v against `rows`, where each row's first set bit is its pivot and
/// later rows are zero at earlier pivots.
void reduce_against(BitVector &v, const std::vector<std::pair<size_t, BitVector>> &rows) {
    for (const auto &[pivot, row] : rows) {
        if (v.get(pivot)) {
            v ^= row;
        }
    }
}

}  // namespace

LogicalSearch::LogicalSearch(const BitMatrix &check, const BitMatrix &stabilizers) : n_(check.cols()) {
    if (stabilizers.cols() != n_) {
        throw std::invalid_argument("check and stabilizer matrices have different column counts");
    }
    // Complement of row(check) inside ker(stabilizers).
    Echelon e = row_reduce(check);
    std::vector<std::pair<size_t, BitVector>> basis;
    for (size_t i = 0; i < e.pivots.size(); i++) {
        basis.emplace_back(e.pivots[i], e.reduced.row(i));
    }
    std::vector<BitVector> reps;
    for (BitVector v : right_kernel_basis(stabilizers)) {
        reduce_against(v, basis);
        if (v.is_zero()) {
            continue;
        }
        size_t pivot = v.ones().front();
        basis.emplace_back(pivot, v);
        reps.push_back(std::move(v));
    }
    logical_count_ = reps.size();

    check_words_ = (check.rows() + 63) / 64;
    logical_words_ = (logical_count_ + 63) / 64;
    columns_.assign(n_ * stride(), 0);
    BitMatrix ct = check.transpose();
    for (size_t j = 0; j < n_; j++) {
        uint64_t *col = columns_.data() + j * stride();
        auto words = ct.row_words(j);
        std::copy(words.begin(), words.end(), col);
        for (size_t i = 0; i < logical_count_; i++) {
            if (reps[i].get(j)) {
                col[check_words_ + i / 64] |= uint64_t{1} << (i % 64);
            }
        }
    }
}

std::optional<LogicalHit> find_min_logical_reference(const LogicalSearch &s, size_t w_max) {
    const size_t n = s.n(), stride = s.stride(), cw = s.check_words(), lw = s.logical_words();
    if (s.logical_count() == 0) {
        return std::nullopt;
    }
    for (size_t w = 1; w <= std::min(w_max, n); w++) {
        std::vector<size_t> idx(w);
        std::vector<uint64_t> acc((w + 1) * stride, 0);
        // acc level t holds the XOR of columns idx[0..t-1].
        size_t level = 0;
        idx[0] = 0;
        while (true) {
            if (idx[level] > n - (w - level)) {
                if (level == 0) {
                    break;
                }
                level--;
                idx[level]++;
                continue;
            }
            uint64_t *next = acc.data() + (level + 1) * stride;
            xor_into(next, acc.data() + level * stride, s.check_part(idx[level]), stride);
            if (level + 1 == w) {
                if (!any_set(next, cw) && any_set(next + cw, lw)) {
                    return LogicalHit{w, idx};
                }
                idx[level]++;
            } else {
                level++;
                idx[level] = idx[level - 1] + 1;
            }
        }
    }
    return std::nullopt;
}

namespace {

class SyndromeTable {
   public:
    explicit SyndromeTable(const LogicalSearch &s) : s_(s) {
        entries_.reserve(s.n());
        for (size_t j = 0; j < s.n(); j++) {
            entries_.emplace_back(hash_words(s.check_part(j), s.check_words()), j);
        }
        std::sort(entries_.begin(), entries_.end());
    }

    /// Smallest column j > after with check part equal to `check` and
    /// logical part differing from `logical`.
    std::optional<size_t> complete(const uint64_t *check, const uint64_t *logical, size_t after) const {
        const size_t cw = s_.check_words(), lw = s_.logical_words();
        uint64_t h = hash_words(check, cw);
        auto lo = std::lower_bound(entries_.begin(), entries_.end(), std::pair<uint64_t, size_t>{h, after + 1});
        for (auto it = lo; it != entries_.end() && it->first == h; ++it) {
            size_t j = it->second;
            if (std::memcmp(s_.check_part(j), check, cw * sizeof(uint64_t)) != 0) {
                continue;
            }
            const uint64_t *lj = s_.logical_part(j);
            for (size_t i = 0; i < lw; i++) {
                if (lj[i] != logical[i]) {
                    return j;
                }
            }
        }
        return std::nullopt;
    }

   private:
    const LogicalSearch &s_;
    std::vector<std::pair<uint64_t, size_t>> entries_;
};

/// Lexicographically first weight-w hit whose first index is `first`.
std::optional<std::vector<size_t>> search_subtree(const LogicalSearch &s, const SyndromeTable &table, size_t w,
                                                  size_t first) {
    const size_t n = s.n(), stride = s.stride(), cw = s.check_words();
    std::vector<size_t> idx(w);
    std::vector<uint64_t> acc(w * stride, 0);
    idx[0] = first;
    std::copy(s.check_part(first), s.check_part(first) + stride, acc.begin());
    // Prefix idx[0..level] is fixed and acc level holds its XOR; the last
    // index comes from the table.
    size_t level = 0;
    while (true) {
        if (level + 2 == w) {
            const uint64_t *a = acc.data() + level * stride;
            if (auto j = table.complete(a, a + cw, idx[level])) {
                idx[w - 1] = *j;
                return idx;
            }
        } else if (idx[level] + 1 <= n - (w - level - 1)) {
            level++;
            idx[level] = idx[level - 1] + 1;
            xor_into(acc.data() + level * stride, acc.data() + (level - 1) * stride, s.check_part(idx[level]), stride);
            continue;
        }
        // Advance the deepest movable prefix index.
        while (true) {
            if (level == 0) {
                return std::nullopt;
            }
            idx[level]++;
            if (idx[level] <= n - (w - level)) {
                xor_into(acc.data() + level * stride, acc.data() + (level - 1) * stride, s.check_part(idx[level]),
                         stride);
                break;
            }
            level--;
        }
    }
}

}  // namespace

std::optional<LogicalHit> find_min_logical(const LogicalSearch &s, size_t w_max, int threads) {
    const size_t n = s.n(), cw = s.check_words(), lw = s.logical_words();
    if (s.logical_count() == 0 || w_max == 0 || n == 0) {
        return std::nullopt;
    }
    for (size_t j = 0; j < n; j++) {
        if (!any_set(s.check_part(j), cw) && any_set(s.logical_part(j), lw)) {
            return LogicalHit{1, {j}};
        }
    }
    SyndromeTable table(s);
    const int nt = threads > 0 ? threads : omp_get_max_threads();
    for (size_t w = 2; w <= std::min(w_max, n); w++) {
        const long long roots = static_cast<long long>(n - w + 1);
        long long best_root = roots;
        std::vector<size_t> best;
#pragma omp parallel for num_threads(nt) schedule(dynamic, 1)
        for (long long root = 0; root < roots; root++) {
            long long seen;
#pragma omp atomic read
            seen = best_root;
            if (root > seen) {
                continue;
            }
            auto hit = search_subtree(s, table, w, static_cast<size_t>(root));
            if (hit) {
#pragma omp critical(dircode_best_root)
                {
                    if (root < best_root) {
#pragma omp atomic write
                        best_root = root;
                        best = std::move(*hit);
                    }
                }
            }
        }
        if (!best.empty()) {
            return LogicalHit{w, std::move(best)};
        }
    }
    return std::nullopt;
}

}  // namespace dircode

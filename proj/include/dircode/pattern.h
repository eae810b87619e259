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

#ifndef DIRCODE_PATTERN_H
#define DIRCODE_PATTERN_H

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dircode/vec2.h"
#include "dircode/word.h"

namespace dircode {

/// Data-qubit offsets Q_1..Q_w touched by a route, relative to the ancilla
/// anchor, in route order. Offsets may repeat when the route backtracks.
struct SupportPattern {
    std::vector<Vec2> offsets;

    size_t word_length() const {
        return offsets.size();
    }
    /// Offsets that survive mod-2 cancellation on the infinite lattice.
    std::vector<Vec2> effective_support() const;
};

/// Q_j = 2 (d_1 + ... + d_{j-1}) + d_j.
SupportPattern support_pattern(const DirectionWord &w);

/// Q_j - Q_i over index pairs i < j, with multiplicities.
using DifferenceMultiset = std::map<Vec2, size_t>;

DifferenceMultiset difference_multiset(const SupportPattern &p);

/// Differences that occur an odd number of times, sorted.
std::vector<Vec2> odd_difference_set(const DifferenceMultiset &d);

/// Rank <= 2 sublattice of Z^2 held in a fixed Hermite normal form:
///   rank 2: {(a, 0), (b, c)} with a > 0, c > 0, 0 <= b < a
///   rank 1: {(b, c)} with c > 0, or {(a, 0)} with a > 0
///   rank 0: empty basis
/// Two generator sets span the same lattice iff their normal forms compare
/// equal.
class IntegerLattice {
   public:
    IntegerLattice() = default;

    static IntegerLattice from_generators(const std::vector<Vec2> &gens);

    int rank() const {
        return static_cast<int>(basis_.size());
    }
    const std::vector<Vec2> &basis() const {
        return basis_;
    }
    /// |Z^2 : L| for rank 2; nullopt (infinite) otherwise.
    std::optional<int64_t> index() const;

    bool contains(Vec2 v) const;
    /// True iff every lattice vector has even coordinate sum.
    bool preserves_parity() const;

    /// Residue of `site` modulo the lattice, for rank 2 only: the unique
    /// (r_x, r_y) with 0 <= r_x < a, 0 <= r_y < c and site - r in L.
    Vec2 reduce(Vec2 site) const;

    bool operator==(const IntegerLattice &) const = default;
    std::string str() const;

   private:
    std::vector<Vec2> basis_;
};

IntegerLattice lattice_from_generators(const std::vector<Vec2> &gens);

/// Raised when a lattice operation needs a full-rank lattice.
class DegenerateLattice : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Number of ancilla cosets, index / 2. Requires rank 2 and even-sum
/// generators (otherwise the lattice mixes data and ancilla sites).
int64_t ancilla_coset_count(const IntegerLattice &l);

/// Canonical coset label: sites share a label iff their difference lies in l.
Vec2 coset_label(const IntegerLattice &l, Vec2 site);

/// Outcome of the inverse (offsets -> route) problem.
struct Realization {
    std::optional<DirectionWord> word;
    /// Offsets in the order the witness visits them.
    std::vector<Vec2> ordering;
    /// Empty when realizable. Otherwise names the failing condition.
    std::string reason;
    /// Index into the ordering where the failure was detected.
    size_t position = 0;

    bool realizable() const {
        return word.has_value();
    }
};

/// Reconstructs the unique route visiting `offsets` in the given order, via
/// d_1 = Q_1 and d_{j+1} = (Q_{j+1} - Q_j) - d_j.
Realization reconstruct_word(const std::vector<Vec2> &offsets);

constexpr size_t kDefaultRealizabilityBound = 10;

/// Searches all orderings of the distinct offsets (each used exactly once)
/// for a route. Throws std::length_error above `max_size` offsets.
Realization is_realizable(const std::vector<Vec2> &offsets, size_t max_size = kDefaultRealizabilityBound);

struct RectangleBound {
    int64_t min_lx = 2;
    int64_t min_ly = 2;
};

/// Smallest even (L_x, L_y) strictly exceeding every |v_x|, |v_y| over
/// D(W) and D(W) +- D(W), where D(W) = {+-(Q_j - Q_i)}.
RectangleBound admissible_rectangle_bound(const SupportPattern &p);

/// True iff the offsets stay pairwise distinct after reduction mod the torus.
bool offsets_distinct_mod(const SupportPattern &p, int64_t lx, int64_t ly);

}  // namespace dircode

#endif

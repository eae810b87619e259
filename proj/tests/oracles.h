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

#ifndef DIRCODE_TESTS_ORACLES_H
#define DIRCODE_TESTS_ORACLES_H

// Slow, independent reimplementations used only to check the library.

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "dircode/gf2.h"
#include "dircode/pattern.h"
#include "dircode/torus.h"
#include "dircode/word.h"

namespace oracle {

using dircode::BitMatrix;
using dircode::BitVector;
using dircode::DirectionWord;
using dircode::Vec2;

/// Every GF(2) combination of the rows, as packed 64-bit masks. cols <= 64,
/// rows <= 20.
std::set<uint64_t> row_span(const BitMatrix &m);

size_t rank_by_span(const BitMatrix &m);

uint64_t to_mask(const BitVector &v);

/// Minimum weight of x with check x = 0 and x outside row(stabilizers), by
/// walking all 2^n vectors. n <= 20.
std::optional<size_t> brute_force_distance(const BitMatrix &check, const BitMatrix &stabilizers);

/// Check rows built by walking the route on the doubled lattice: vertices
/// v_0 = anchor, v_j = v_{j-1} + 2 d_j, and the data qubit touched at step j
/// is the midpoint of v_{j-1} and v_j.
std::vector<std::set<Vec2>> route_rows(const DirectionWord &w, const dircode::CheckerboardTorus &t,
                                       const std::vector<Vec2> &anchors);

/// Column index by linear scan over the sites in row-major order.
size_t scan_data_index(const dircode::CheckerboardTorus &t, Vec2 site);

/// Smallest even sizes strictly above every coordinate of D and D +- D.
dircode::RectangleBound brute_force_rectangle_bound(const std::vector<Vec2> &offsets);

/// gcd of all 2x2 minors: the index of a rank-2 lattice, 0 otherwise.
int64_t index_by_minors(const std::vector<Vec2> &gens);

/// v in span(gens) for a rank-2 generating set, via the index of gens + {v}.
bool contains_by_minors(const std::vector<Vec2> &gens, Vec2 v);

/// Orbit by closure under four generators: quarter turn, E/W mirror,
/// reversal with inversion, and a one-letter cyclic shift.
std::set<DirectionWord> orbit_by_closure(const DirectionWord &w, bool include_cyclic);

DirectionWord random_word(std::mt19937_64 &rng, size_t min_len, size_t max_len);

/// Words with no letter followed by its inverse.
DirectionWord random_word_no_backtrack(std::mt19937_64 &rng, size_t min_len, size_t max_len);

BitMatrix random_matrix(std::mt19937_64 &rng, size_t rows, size_t cols, double density = 0.5);

}  // namespace oracle

#endif

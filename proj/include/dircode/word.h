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

#ifndef DIRCODE_WORD_H
#define DIRCODE_WORD_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dircode/vec2.h"

namespace dircode {

/// Cardinal steps. The enumerator order is the letter order used for
/// canonical forms: N < E < S < W.
enum class Dir : uint8_t { N = 0, E = 1, S = 2, W = 3 };

Vec2 step(Dir d);
Dir inverse(Dir d);
char letter(Dir d);

/// Raised by parse_word; position() is the 0-based offset of the offending
/// character in the input text.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &message, size_t position);
    size_t position() const {
        return position_;
    }

   private:
    size_t position_;
};

/// A route over {N, E, S, W}. Never empty.
class DirectionWord {
   public:
    explicit DirectionWord(std::vector<Dir> letters);

    size_t size() const {
        return letters_.size();
    }
    Dir operator[](size_t i) const {
        return letters_[i];
    }
    const std::vector<Dir> &letters() const {
        return letters_;
    }

    /// Net displacement of the route; zero iff the route is closed.
    Vec2 endpoint() const;
    bool is_closed() const {
        return endpoint() == Vec2{0, 0};
    }

    auto operator<=>(const DirectionWord &) const = default;

   private:
    std::vector<Dir> letters_;
};

/// Accepts "NE2N" and "NE^2N"; an exponent repeats the preceding letter.
DirectionWord parse_word(std::string_view text);

/// compressed=true run-length encodes repeats of two or more ("NE2N").
std::string format_word(const DirectionWord &w, bool compressed = true);

/// One element of the word equivalence group.
///
/// `dihedral` in 0..7 encodes reflect-then-rotate: bit 2 selects the E<->W
/// mirror, the low two bits count quarter turns N->E->S->W->N. `reversed`
/// reverses the route and inverts each step. `shift` rotates the letter
/// sequence left.
struct SymmetryElement {
    uint8_t dihedral = 0;
    bool reversed = false;
    size_t shift = 0;

    static SymmetryElement identity() {
        return {};
    }
};

/// Letter permutation of dihedral element d (d in 0..7).
Dir apply_dihedral(uint8_t d, Dir letter);
/// Index of the dihedral element equal to "first apply b, then a".
uint8_t compose_dihedral(uint8_t a, uint8_t b);

/// Applies the cyclic shift, then reversal-with-inversion, then the dihedral
/// permutation.
DirectionWord apply_symmetry(const DirectionWord &w, const SymmetryElement &g);

std::set<DirectionWord> word_orbit(const DirectionWord &w, bool include_cyclic = true);

/// Lexicographically least orbit member under N < E < S < W.
DirectionWord canonical_word(const DirectionWord &w, bool include_cyclic = true);

}  // namespace dircode

#endif

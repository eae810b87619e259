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

#include "dircode/word.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>

namespace dircode {

namespace {

// Longest run a single exponent may request. Keeps a typo like "N99999999"
// from allocating gigabytes.
constexpr size_t kMaxExponent = 100000;

std::optional<Dir> dir_from_char(char c) {
    switch (c) {
        case 'N':
            return Dir::N;
        case 'E':
            return Dir::E;
        case 'S':
            return Dir::S;
        case 'W':
            return Dir::W;
        default:
            return std::nullopt;
    }
}

}  // namespace

Vec2 step(Dir d) {
    switch (d) {
        case Dir::N:
            return {0, 1};
        case Dir::E:
            return {1, 0};
        case Dir::S:
            return {0, -1};
        case Dir::W:
            return {-1, 0};
    }
    return {};
}

Dir inverse(Dir d) {
    return static_cast<Dir>((static_cast<uint8_t>(d) + 2) % 4);
}

char letter(Dir d) {
    return "NESW"[static_cast<uint8_t>(d)];
}

ParseError::ParseError(const std::string &message, size_t position)
    : std::invalid_argument(message + " (at position " + std::to_string(position) + ")"), position_(position) {
}

DirectionWord::DirectionWord(std::vector<Dir> letters) : letters_(std::move(letters)) {
    if (letters_.empty()) {
        throw std::invalid_argument("a direction word needs at least one letter");
    }
}

Vec2 DirectionWord::endpoint() const {
    Vec2 p;
    for (Dir d : letters_) {
        p += step(d);
    }
    return p;
}

DirectionWord parse_word(std::string_view text) {
    if (text.empty()) {
        throw ParseError("empty word", 0);
    }
    std::vector<Dir> out;
    bool have_letter = false;
    size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (auto d = dir_from_char(c)) {
            out.push_back(*d);
            have_letter = true;
            i++;
            continue;
        }
        if (c != '^' && !std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError(std::string("illegal character '") + c + "'", i);
        }
        size_t start = i;
        if (!have_letter) {
            throw ParseError("exponent with no preceding letter", start);
        }
        if (c == '^') {
            i++;
            if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
                throw ParseError("'^' must be followed by digits", i);
            }
        }
        size_t value = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            value = value * 10 + static_cast<size_t>(text[i] - '0');
            if (value > kMaxExponent) {
                throw ParseError("exponent too large", start);
            }
            i++;
        }
        if (value == 0) {
            throw ParseError("exponent must be at least 1", start);
        }
        Dir last = out.back();
        out.insert(out.end(), value - 1, last);
        // An exponent consumes its letter: "N2^3" has no letter for "^3".
        have_letter = false;
    }
    return DirectionWord(std::move(out));
}

std::string format_word(const DirectionWord &w, bool compressed) {
    std::string out;
    const auto &ls = w.letters();
    if (!compressed) {
        for (Dir d : ls) {
            out.push_back(letter(d));
        }
        return out;
    }
    size_t i = 0;
    while (i < ls.size()) {
        size_t j = i;
        while (j < ls.size() && ls[j] == ls[i]) {
            j++;
        }
        out.push_back(letter(ls[i]));
        if (j - i >= 2) {
            out += std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

Dir apply_dihedral(uint8_t d, Dir l) {
    if (d >= 8) {
        throw std::out_of_range("dihedral index must be in 0..7");
    }
    uint8_t i = static_cast<uint8_t>(l);
    if (d & 4) {
        i = (4 - i) % 4;
    }
    return static_cast<Dir>((i + (d & 3)) % 4);
}

uint8_t compose_dihedral(uint8_t a, uint8_t b) {
    for (uint8_t c = 0; c < 8; c++) {
        bool same = true;
        for (uint8_t l = 0; l < 4; l++) {
            Dir x = static_cast<Dir>(l);
            if (apply_dihedral(c, x) != apply_dihedral(a, apply_dihedral(b, x))) {
                same = false;
                break;
            }
        }
        if (same) {
            return c;
        }
    }
    throw std::logic_error("dihedral elements are not closed under composition");
}

DirectionWord apply_symmetry(const DirectionWord &w, const SymmetryElement &g) {
    if (g.shift >= w.size()) {
        throw std::out_of_range("cyclic shift " + std::to_string(g.shift) + " out of range for word of length " +
                                std::to_string(w.size()));
    }
    std::vector<Dir> ls = w.letters();
    std::rotate(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(g.shift), ls.end());
    if (g.reversed) {
        std::reverse(ls.begin(), ls.end());
        for (Dir &d : ls) {
            d = inverse(d);
        }
    }
    for (Dir &d : ls) {
        d = apply_dihedral(g.dihedral, d);
    }
    return DirectionWord(std::move(ls));
}

std::set<DirectionWord> word_orbit(const DirectionWord &w, bool include_cyclic) {
    std::set<DirectionWord> orbit;
    size_t shifts = include_cyclic ? w.size() : 1;
    for (size_t s = 0; s < shifts; s++) {
        for (bool rev : {false, true}) {
            for (uint8_t d = 0; d < 8; d++) {
                orbit.insert(apply_symmetry(w, {d, rev, s}));
            }
        }
    }
    return orbit;
}

DirectionWord canonical_word(const DirectionWord &w, bool include_cyclic) {
    return *word_orbit(w, include_cyclic).begin();
}

}  // namespace dircode

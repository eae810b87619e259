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

#include <random>

#include "gtest/gtest.h"
#include "oracles.h"

using namespace dircode;

namespace {

std::vector<Dir> letters(const std::string &raw) {
    std::vector<Dir> out;
    for (char c : raw) {
        out.push_back(static_cast<Dir>(std::string("NESW").find(c)));
    }
    return out;
}

}  // namespace

TEST(parse_word, examples) {
    ASSERT_EQ(parse_word("NE2N").letters(), letters("NEEN"));
    ASSERT_EQ(parse_word("NE^2N").letters(), letters("NEEN"));
    ASSERT_EQ(parse_word("NE2NE2N").size(), 7);
    ASSERT_EQ(parse_word("NE2NE2N").letters(), letters("NEENEEN"));
    ASSERT_EQ(parse_word("N").letters(), letters("N"));
    ASSERT_EQ(parse_word("W12").size(), 12);
}

TEST(parse_word, errors) {
    ASSERT_THROW(parse_word(""), ParseError);
    ASSERT_THROW(parse_word("NX"), ParseError);
    ASSERT_THROW(parse_word("N0"), ParseError);
    ASSERT_THROW(parse_word("2N"), ParseError);
    ASSERT_THROW(parse_word("N2^3"), ParseError);
    ASSERT_THROW(parse_word("N^"), ParseError);
    ASSERT_THROW(parse_word("n"), ParseError);
    try {
        parse_word("NEx");
        FAIL();
    } catch (const ParseError &e) {
        ASSERT_EQ(e.position(), 2);
    }
}

TEST(format_word, examples) {
    ASSERT_EQ(format_word(parse_word("NEEN")), "NE2N");
    ASSERT_EQ(format_word(parse_word("NE2N"), false), "NEEN");
    ASSERT_EQ(format_word(parse_word("NNN")), "N3");
}

TEST(format_word, round_trip_random) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; i++) {
        DirectionWord w = oracle::random_word(rng, 1, 10);
        ASSERT_EQ(parse_word(format_word(w)), w);
        ASSERT_EQ(parse_word(format_word(w, false)), w);
        ASSERT_EQ(format_word(parse_word(format_word(w))), format_word(w));
    }
}

TEST(apply_symmetry, examples) {
    DirectionWord w = parse_word("NEEN");
    ASSERT_EQ(apply_symmetry(w, SymmetryElement::identity()), w);
    ASSERT_EQ(apply_symmetry(w, {0, true, 0}).letters(), letters("SWWS"));
    ASSERT_EQ(apply_symmetry(w, {1, false, 0}).letters(), letters("ESSE"));
    ASSERT_EQ(apply_symmetry(w, {0, false, 1}).letters(), letters("EENN"));
    ASSERT_THROW(apply_symmetry(w, {0, false, 4}), std::out_of_range);
}

TEST(dihedral, group_closure) {
    for (uint8_t a = 0; a < 8; a++) {
        for (uint8_t b = 0; b < 8; b++) {
            uint8_t c = compose_dihedral(a, b);
            for (int l = 0; l < 4; l++) {
                Dir d = static_cast<Dir>(l);
                ASSERT_EQ(apply_dihedral(c, d), apply_dihedral(a, apply_dihedral(b, d)));
            }
        }
    }
    // Reflections are involutions.
    for (uint8_t a = 4; a < 8; a++) {
        ASSERT_EQ(compose_dihedral(a, a), 0);
    }
}

TEST(word_orbit, examples) {
    auto o = word_orbit(parse_word("N"), true);
    ASSERT_EQ(o, (std::set<DirectionWord>{parse_word("N"), parse_word("E"), parse_word("S"), parse_word("W")}));
    auto o2 = word_orbit(parse_word("NEEN"), true);
    ASSERT_TRUE(o2.count(parse_word("NEEN")));
    ASSERT_LE(o2.size(), 64);
}

TEST(word_orbit, matches_generator_closure) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; i++) {
        DirectionWord w = oracle::random_word(rng, 1, 8);
        for (bool cyc : {false, true}) {
            auto o = word_orbit(w, cyc);
            ASSERT_EQ(o, oracle::orbit_by_closure(w, cyc)) << format_word(w) << " cyclic=" << cyc;
            ASSERT_LE(o.size(), 16 * w.size());
        }
    }
}

TEST(canonical_word, examples) {
    DirectionWord c = canonical_word(parse_word("N"));
    for (const char *s : {"E", "S", "W"}) {
        ASSERT_EQ(canonical_word(parse_word(s)), c);
    }
    ASSERT_EQ(format_word(c), "N");
}

TEST(canonical_word, orbit_invariant_and_idempotent) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 300; i++) {
        DirectionWord w = oracle::random_word(rng, 1, 10);
        for (bool cyc : {false, true}) {
            DirectionWord c = canonical_word(w, cyc);
            ASSERT_EQ(canonical_word(c, cyc), c);
            std::uniform_int_distribution<size_t> shift(0, w.size() - 1);
            for (uint8_t d = 0; d < 8; d++) {
                SymmetryElement g{d, (i + d) % 2 == 1, cyc ? shift(rng) : 0};
                ASSERT_EQ(canonical_word(apply_symmetry(w, g), cyc), c);
            }
        }
    }
}

TEST(word_orbit, closed_under_generators) {
    std::mt19937_64 rng(6);
    for (int i = 0; i < 50; i++) {
        DirectionWord w = oracle::random_word(rng, 2, 7);
        auto o = word_orbit(w, true);
        for (const auto &x : o) {
            for (uint8_t d = 0; d < 8; d++) {
                for (bool rev : {false, true}) {
                    for (size_t s = 0; s < x.size(); s++) {
                        ASSERT_TRUE(o.count(apply_symmetry(x, {d, rev, s})));
                    }
                }
            }
        }
    }
}

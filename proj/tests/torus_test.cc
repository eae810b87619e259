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

#include "dircode/torus.h"

#include <random>

#include "dircode/distance.h"
#include "gtest/gtest.h"
#include "oracles.h"

using namespace dircode;

namespace {

const DirectionWord kCase = parse_word("NE2NE2N");

IntegerLattice lattice_of(const DirectionWord &w) {
    return lattice_from_generators(odd_difference_set(difference_multiset(support_pattern(w))));
}

Layout all_x(const CheckerboardTorus &t) {
    Layout lay;
    lay.assignment.assign(t.n(), CheckType::X);
    return lay;
}

}  // namespace

TEST(checkerboard_torus, construction) {
    ASSERT_THROW(CheckerboardTorus(7, 6), std::invalid_argument);
    ASSERT_THROW(CheckerboardTorus(8, 5), std::invalid_argument);
    ASSERT_THROW(CheckerboardTorus(0, 6), std::invalid_argument);
    ASSERT_EQ(CheckerboardTorus(8, 6).n(), 24);
}

TEST(checkerboard_torus, data_index) {
    CheckerboardTorus t(8, 6);
    std::vector<size_t> got;
    for (Vec2 s : std::vector<Vec2>{{1, 1}, {2, 2}, {4, 2}, {5, 3}}) {
        got.push_back(t.data_index(s));
    }
    ASSERT_EQ(got, (std::vector<size_t>{4, 9, 10, 14}));
    ASSERT_EQ(t.data_index({0, 0}), 0);
    ASSERT_EQ(t.data_index({7, 5}), t.n() - 1);
    ASSERT_EQ(t.data_index({-1, -1}), t.n() - 1);
    ASSERT_THROW(t.data_index({1, 0}), std::invalid_argument);
    ASSERT_THROW(t.ancilla_index({0, 0}), std::invalid_argument);
}

TEST(checkerboard_torus, index_maps_are_inverse) {
    for (auto [lx, ly] : std::vector<std::pair<int, int>>{{2, 2}, {8, 6}, {12, 6}, {6, 10}}) {
        CheckerboardTorus t(lx, ly);
        for (size_t i = 0; i < t.n(); i++) {
            Vec2 d = t.data_site(i);
            ASSERT_FALSE(d.odd_parity());
            ASSERT_EQ(t.data_index(d), i);
            ASSERT_EQ(oracle::scan_data_index(t, d), i);
            Vec2 a = t.ancilla_site(i);
            ASSERT_TRUE(a.odd_parity());
            ASSERT_EQ(t.ancilla_index(a), i);
        }
        ASSERT_THROW(t.data_site(t.n()), std::out_of_range);
    }
}

TEST(row_alternating_layout, examples) {
    CheckerboardTorus t(12, 6);
    Layout lay = row_alternating_layout(t);
    ASSERT_EQ(lay.assignment[t.ancilla_index({1, 0})], CheckType::X);
    ASSERT_EQ(lay.assignment[t.ancilla_index({0, 1})], CheckType::Z);
    ASSERT_EQ(lay.count(CheckType::X), t.n() / 2);
    ASSERT_EQ(lay.count(CheckType::Z), t.n() / 2);
    ASSERT_EQ(lay.descriptor(), "row-alt");
}

TEST(build_code, examples) {
    CheckerboardTorus t(8, 6);
    CodeInstance c = build_code(parse_word("NE2N"), t, row_alternating_layout(t));
    size_t r = c.row_of_ancilla[t.ancilla_index({1, 0})];
    ASSERT_EQ(c.x_anchors[r], (Vec2{1, 0}));
    ASSERT_EQ(c.hx.row_support(r), (std::vector<size_t>{4, 9, 10, 14}));
    for (size_t i = 0; i < c.hx.rows(); i++) {
        ASSERT_EQ(c.hx.row(i).weight(), 4);
    }
    for (size_t i = 0; i < c.hz.rows(); i++) {
        ASSERT_EQ(c.hz.row(i).weight(), 4);
    }

    CheckerboardTorus t2(12, 6);
    CodeInstance k = build_code(kCase, t2, row_alternating_layout(t2));
    ASSERT_EQ(k.hx.rows(), 18);
    ASSERT_EQ(k.hx.cols(), 36);
    ASSERT_EQ(k.hz.rows(), 18);
    ASSERT_EQ(k.hz.cols(), 36);
    ASSERT_EQ(k.hx.rows() + k.hz.rows(), t2.n());
    ASSERT_EQ(rank(k.hx), 16);
    ASSERT_EQ(oracle::rank_by_span(k.hx), 16);
    ASSERT_EQ(left_kernel_dim(k.hx), 2);

    ASSERT_THROW(build_code(kCase, t2, row_alternating_layout(t)), std::invalid_argument);
}

TEST(build_code, matches_route_walk) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> half(1, 6);
    for (int trial = 0; trial < 150; trial++) {
        DirectionWord w = oracle::random_word(rng, 1, 9);
        CheckerboardTorus t(2 * half(rng), 2 * half(rng));
        CodeInstance c = build_code(w, t, row_alternating_layout(t));
        auto xr = oracle::route_rows(w, t, c.x_anchors);
        auto zr = oracle::route_rows(w, t, c.z_anchors);
        auto to_indices = [&t](const std::set<Vec2> &row) {
            std::vector<size_t> out;
            for (Vec2 s : row) {
                out.push_back(oracle::scan_data_index(t, s));
            }
            std::sort(out.begin(), out.end());
            return out;
        };
        for (size_t r = 0; r < xr.size(); r++) {
            ASSERT_EQ(c.hx.row_support(r), to_indices(xr[r])) << format_word(w);
        }
        for (size_t r = 0; r < zr.size(); r++) {
            ASSERT_EQ(c.hz.row_support(r), to_indices(zr[r])) << format_word(w);
        }
    }
}

TEST(build_code, strict_wrap) {
    CheckerboardTorus small(2, 6);
    ASSERT_THROW(build_code(kCase, small, row_alternating_layout(small), {true}), WrapCollision);
    CodeInstance c = build_code(kCase, small, row_alternating_layout(small));
    ASSERT_LT(c.hx.row(0).weight(), 7);
    CheckerboardTorus ok(12, 6);
    ASSERT_NO_THROW(build_code(kCase, ok, row_alternating_layout(ok), {true}));
}

TEST(verify_commutation, examples) {
    CheckerboardTorus t(12, 6);
    ASSERT_TRUE(verify_commutation(build_code(kCase, t, row_alternating_layout(t))));

    // (2,0) is an odd-multiplicity difference of NE2N.
    CheckerboardTorus t2(12, 6);
    Layout lay = all_x(t2);
    lay.assignment[t2.ancilla_index({3, 0})] = CheckType::Z;
    CodeInstance c = build_code(parse_word("NE2N"), t2, lay);
    ASSERT_FALSE(verify_commutation(c));
    ASSERT_THROW(code_parameters(c, 2), NonCommutingCode);

    CodeInstance x = build_code(parse_word("NE2N"), t2, all_x(t2));
    ASSERT_EQ(x.hz.rows(), 0);
    ASSERT_TRUE(verify_commutation(x));
}

TEST(coset_structure, incompatible_torus) {
    CheckerboardTorus t(12, 6);
    ASSERT_THROW(enumerate_coset_layouts(t, lattice_of(kCase)), IncompatibleTorus);
    IntegerLattice tl = torus_lattice(t, lattice_of(kCase));
    ASSERT_EQ(tl, lattice_from_generators({{2, 0}, {0, 2}}));
    ASSERT_EQ(enumerate_coset_layouts(t, tl).size(), 2);
    ASSERT_THROW(CosetStructure(t, lattice_from_generators({{2, 2}})), DegenerateLattice);
}

TEST(enumerate_coset_layouts, two_cosets) {
    CheckerboardTorus t(8, 6);
    auto layouts = enumerate_coset_layouts(t, lattice_of(parse_word("NE2N")));
    ASSERT_EQ(layouts.size(), 2);
    size_t mixed = 0;
    for (const auto &lay : layouts) {
        ASSERT_EQ(lay.coset_bits[0], 0);
        mixed += lay.count(CheckType::X) > 0 && lay.count(CheckType::Z) > 0;
    }
    ASSERT_EQ(mixed, 1);
}

TEST(enumerate_coset_layouts, four_cosets_commute_and_are_constant) {
    for (const char *word : {"NE3N", "NE2NE2N", "N2E3N2"}) {
        DirectionWord w = parse_word(word);
        IntegerLattice l = lattice_of(w);
        for (auto [lx, ly] : std::vector<std::pair<int, int>>{{8, 8}, {16, 8}, {24, 12}}) {
            CheckerboardTorus t(lx, ly);
            auto layouts = enumerate_coset_layouts(t, l);
            ASSERT_EQ(layouts.size(), 8) << word;
            std::set<std::vector<uint8_t>> distinct;
            for (const auto &lay : layouts) {
                distinct.insert(lay.coset_bits);
                for (size_t a = 0; a < t.n(); a++) {
                    for (size_t b = 0; b < t.n(); b++) {
                        if (coset_label(l, t.ancilla_site(a)) == coset_label(l, t.ancilla_site(b))) {
                            ASSERT_EQ(lay.assignment[a], lay.assignment[b]);
                        }
                    }
                }
                ASSERT_TRUE(verify_commutation(build_code(w, t, lay))) << word << " " << lay.descriptor();
            }
            ASSERT_EQ(distinct.size(), 8);
        }
    }
}

TEST(enumerate_coset_layouts, flipping_one_ancilla_breaks_commutation) {
    std::mt19937_64 rng(33);
    for (const char *word : {"NE2N", "NE3N", "NE2NE2N", "N2E2N2"}) {
        DirectionWord w = parse_word(word);
        CheckerboardTorus t(24, 12);
        auto layouts = enumerate_coset_layouts(t, lattice_of(w));
        for (const auto &lay : layouts) {
            std::uniform_int_distribution<size_t> pick(0, t.n() - 1);
            Layout broken = lay;
            size_t a = pick(rng);
            broken.kind = Layout::Kind::Custom;
            broken.assignment[a] = broken.assignment[a] == CheckType::X ? CheckType::Z : CheckType::X;
            ASSERT_FALSE(verify_commutation(build_code(w, t, broken))) << word << " " << lay.descriptor();
        }
    }
}

TEST(canonical_layout, properties) {
    CheckerboardTorus t(16, 8);
    IntegerLattice l = lattice_of(parse_word("NE3N"));
    CosetStructure cosets(t, l);
    auto perms = cosets.translation_permutations();
    ASSERT_GT(perms.size(), 1);
    std::set<std::vector<uint8_t>> reps;
    for (const auto &lay : enumerate_coset_layouts(t, l)) {
        Layout c = canonical_layout(t, cosets, lay);
        ASSERT_EQ(canonical_layout(t, cosets, c).coset_bits, c.coset_bits);
        ASSERT_EQ(c.coset_bits[0], 0);
        for (const auto &pi : perms) {
            std::vector<uint8_t> moved(pi.size());
            for (size_t i = 0; i < pi.size(); i++) {
                moved[i] = lay.coset_bits[pi[i]];
            }
            ASSERT_EQ(canonical_layout(t, cosets, coset_layout(t, cosets, moved)).coset_bits, c.coset_bits);
        }
        reps.insert(c.coset_bits);
    }
    ASSERT_LT(reps.size(), 8);
    Layout zero = coset_layout(t, cosets, {0, 0, 0, 0});
    ASSERT_EQ(canonical_layout(t, cosets, zero).coset_bits, zero.coset_bits);
    ASSERT_THROW(canonical_layout(t, cosets, row_alternating_layout(t)), std::invalid_argument);
}

TEST(coset_layout, parse_descriptor) {
    CheckerboardTorus t(8, 8);
    CosetStructure cosets(t, lattice_of(parse_word("NE3N")));
    Layout lay = parse_coset_layout(t, cosets, "coset:0110");
    ASSERT_EQ(lay.descriptor(), "coset:0110");
    ASSERT_THROW(parse_coset_layout(t, cosets, "coset:01"), std::invalid_argument);
    ASSERT_THROW(parse_coset_layout(t, cosets, "coset:01x0"), std::invalid_argument);
    ASSERT_THROW(parse_coset_layout(t, cosets, "row-alt"), std::invalid_argument);
}

TEST(code_parameters, case_family) {
    CheckerboardTorus t1(12, 6);
    CodeParameters p1 = code_parameters(build_code(kCase, t1, row_alternating_layout(t1)), 4);
    ASSERT_EQ(p1.n, 36);
    ASSERT_EQ(p1.k, 4);
    ASSERT_EQ(p1.k_from_dependencies, 4);
    ASSERT_EQ(p1.dx, DistanceResult::exact(2));
    ASSERT_EQ(p1.dz, DistanceResult::exact(2));

    CheckerboardTorus t2(24, 12);
    CodeParameters p2 = code_parameters(build_code(kCase, t2, row_alternating_layout(t2)), 4);
    ASSERT_EQ(p2.n, 144);
    ASSERT_EQ(p2.k, 4);
    ASSERT_EQ(p2.dx, DistanceResult::exact(4));
    ASSERT_EQ(p2.dz, DistanceResult::exact(4));

    CheckerboardTorus t3(16, 8);
    CodeParameters p3 = code_parameters(build_code(kCase, t3, row_alternating_layout(t3)), 4);
    ASSERT_EQ(p3.k, 0);
    ASSERT_EQ(p3.dx, DistanceResult::not_defined());
    ASSERT_EQ(p3.d().str(), "-");
}

TEST(code_parameters, k_formulas_agree) {
    std::mt19937_64 rng(35);
    std::uniform_int_distribution<int> half(1, 8);
    int built = 0;
    for (int trial = 0; trial < 300; trial++) {
        DirectionWord w = oracle::random_word(rng, 1, 8);
        CheckerboardTorus t(2 * half(rng), 2 * half(rng));
        CodeInstance c = build_code(w, t, row_alternating_layout(t));
        if (!verify_commutation(c)) {
            continue;
        }
        built++;
        CodeParameters p = code_parameters(c, 0);
        ASSERT_EQ(p.k, p.k_from_dependencies);
        ASSERT_EQ(p.k, t.n() - rank(c.hx) - rank(c.hz));
    }
    ASSERT_GT(built, 50);
}

TEST(distance_result, formatting_and_min) {
    ASSERT_EQ(DistanceResult::exact(4).str(), "4");
    ASSERT_EQ(DistanceResult::greater_than(4).str(), ">4");
    ASSERT_EQ(DistanceResult::not_defined().str(), "-");
    CodeParameters p;
    p.dx = DistanceResult::exact(3);
    p.dz = DistanceResult::greater_than(4);
    ASSERT_EQ(p.d(), DistanceResult::exact(3));
    p.dx = DistanceResult::greater_than(4);
    ASSERT_EQ(p.d(), DistanceResult::greater_than(4));
}

TEST(distance_screen, matches_brute_force_small) {
    std::mt19937_64 rng(37);
    std::vector<std::pair<int, int>> tori{{4, 4}, {4, 6}, {6, 4}, {8, 4}, {4, 8}, {2, 8}, {8, 2}, {6, 2}};
    int compared = 0;
    for (int trial = 0; trial < 400; trial++) {
        DirectionWord w = oracle::random_word(rng, 1, 8);
        auto [lx, ly] = tori[trial % tori.size()];
        CheckerboardTorus t(lx, ly);
        std::vector<Layout> layouts{row_alternating_layout(t)};
        IntegerLattice l = torus_lattice(t, lattice_of(w));
        if (CosetStructure(t, l).coset_count() <= 4) {
            for (auto &lay : enumerate_coset_layouts(t, l)) {
                layouts.push_back(lay);
            }
        }
        for (const auto &lay : layouts) {
            CodeInstance c = build_code(w, t, lay);
            if (!verify_commutation(c)) {
                continue;
            }
            CodeParameters p = code_parameters(c, t.n());
            auto bx = oracle::brute_force_distance(c.hz, c.hx);
            auto bz = oracle::brute_force_distance(c.hx, c.hz);
            if (p.k == 0) {
                ASSERT_FALSE(bx.has_value());
                ASSERT_FALSE(bz.has_value());
                continue;
            }
            compared++;
            ASSERT_EQ(p.dx, DistanceResult::exact(*bx)) << format_word(w) << " " << lx << "x" << ly;
            ASSERT_EQ(p.dz, DistanceResult::exact(*bz)) << format_word(w) << " " << lx << "x" << ly;
        }
    }
    ASSERT_GT(compared, 100);
}

TEST(dependency_certificate, case_word) {
    for (int m : {1, 2, 3}) {
        CheckerboardTorus t(12 * m, 6 * m);
        DependencyCertificate cert = dependency_certificate(kCase, t);
        ASSERT_TRUE(cert.verified) << m;
        ASSERT_EQ(cert.x_relations.size(), 2);
        ASSERT_EQ(cert.z_relations.size(), 2);
        CodeInstance c = build_code(kCase, t, row_alternating_layout(t));
        for (const auto &rel : cert.x_relations) {
            BitVector sum(t.n());
            for (size_t r : rel) {
                sum ^= c.hx.row(r);
                ASSERT_EQ(floor_mod(c.x_anchors[r].y, 2), 0);
            }
            ASSERT_TRUE(sum.is_zero());
        }
    }
}

TEST(dependency_certificate, not_applicable) {
    ASSERT_THROW(dependency_certificate(kCase, CheckerboardTorus(16, 8)), CertificateNotApplicable);
    ASSERT_THROW(dependency_certificate(parse_word("NE2N"), CheckerboardTorus(12, 6)), CertificateNotApplicable);
}

TEST(motif_operator, support_and_errors) {
    CheckerboardTorus t(12, 6);
    auto s = motif_operator(t, {0, 0});
    ASSERT_EQ(s.size(), 2);
    ASSERT_EQ(s, (std::vector<size_t>{t.data_index({0, 0}), t.data_index({4, 2})}));
    CheckerboardTorus t2(24, 12);
    ASSERT_EQ(motif_operator(t2, {0, 0}, {4, 2}, {12, 6}, 2).size(), 4);
    ASSERT_THROW(motif_operator(t, {1, 0}), std::invalid_argument);
    ASSERT_THROW(motif_operator(t, {0, 0}, {1, 0}), std::invalid_argument);
    ASSERT_THROW(motif_operator(t, {0, 0}, {4, 2}, {12, 6}, 0), std::invalid_argument);
}

TEST(motif_operator, case_family_upper_bounds) {
    for (size_t m : {1, 2, 3}) {
        CheckerboardTorus t(12 * static_cast<int64_t>(m), 6 * static_cast<int64_t>(m));
        CodeInstance c = build_code(kCase, t, row_alternating_layout(t));
        auto sites = find_motif_sites(c, m);
        size_t x_logicals = 0, z_logicals = 0;
        for (const auto &site : sites) {
            auto support = motif_operator(t, site.p, {4, 2}, {12, 6}, m);
            ASSERT_EQ(support.size(), 2 * m);
            BitVector v = BitVector::from_indices(t.n(), support);
            const BitMatrix &opposite = site.pauli == CheckType::X ? c.hz : c.hx;
            ASSERT_TRUE(mul_mod2(opposite, v).is_zero());
            if (site.nontrivial) {
                const BitMatrix &same = site.pauli == CheckType::X ? c.hx : c.hz;
                ASSERT_FALSE(in_row_space(same, v));
                (site.pauli == CheckType::X ? x_logicals : z_logicals)++;
            }
        }
        ASSERT_GT(x_logicals, 0) << m;
        ASSERT_GT(z_logicals, 0) << m;
    }
}

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

#include "dircode/pattern.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

namespace dircode {

namespace {

bool is_cardinal(Vec2 v) {
    return std::abs(v.x) + std::abs(v.y) == 1;
}

Dir to_dir(Vec2 v) {
    if (v == Vec2{0, 1}) {
        return Dir::N;
    }
    if (v == Vec2{1, 0}) {
        return Dir::E;
    }
    if (v == Vec2{0, -1}) {
        return Dir::S;
    }
    return Dir::W;
}

/// Sigma = {u + v : u, v cardinal} = {(+-2,0), (0,+-2), (+-1,+-1)}.
// Includes (0,0): a step followed by its inverse repeats the offset.
bool in_two_step_alphabet(Vec2 v) {
    int64_t ax = std::abs(v.x), ay = std::abs(v.y);
    return (ax == 2 && ay == 0) || (ax == 0 && ay == 2) || (ax == 1 && ay == 1) || (ax == 0 && ay == 0);
}

}  // namespace

std::vector<Vec2> SupportPattern::effective_support() const {
    std::map<Vec2, size_t> counts;
    for (const Vec2 &q : offsets) {
        counts[q]++;
    }
    std::vector<Vec2> out;
    for (const auto &[q, c] : counts) {
        if (c % 2 == 1) {
            out.push_back(q);
        }
    }
    return out;
}

SupportPattern support_pattern(const DirectionWord &w) {
    SupportPattern p;
    p.offsets.reserve(w.size());
    Vec2 position;
    for (Dir d : w.letters()) {
        Vec2 s = step(d);
        p.offsets.push_back(position * 2 + s);
        position += s;
    }
    return p;
}

DifferenceMultiset difference_multiset(const SupportPattern &p) {
    DifferenceMultiset out;
    const auto &q = p.offsets;
    for (size_t j = 0; j < q.size(); j++) {
        for (size_t i = 0; i < j; i++) {
            out[q[j] - q[i]]++;
        }
    }
    return out;
}

std::vector<Vec2> odd_difference_set(const DifferenceMultiset &d) {
    std::vector<Vec2> out;
    for (const auto &[v, mu] : d) {
        if (mu % 2 == 1) {
            out.push_back(v);
        }
    }
    return out;
}

IntegerLattice IntegerLattice::from_generators(const std::vector<Vec2> &gens) {
    std::vector<Vec2> rows;
    for (const Vec2 &g : gens) {
        if (!g.is_zero()) {
            rows.push_back(g);
        }
    }
    // Euclid on the y column until at most one row has y != 0.
    while (true) {
        auto nonzero_y = [](const Vec2 &v) { return v.y != 0; };
        auto count = std::count_if(rows.begin(), rows.end(), nonzero_y);
        if (count <= 1) {
            break;
        }
        auto pivot = std::min_element(rows.begin(), rows.end(), [](const Vec2 &a, const Vec2 &b) {
            if ((a.y == 0) != (b.y == 0)) {
                return a.y != 0;
            }
            return std::abs(a.y) < std::abs(b.y);
        });
        Vec2 p = *pivot;
        for (auto it = rows.begin(); it != rows.end(); ++it) {
            if (it != pivot && it->y != 0) {
                *it = *it - p * (it->y / p.y);
            }
        }
    }
    Vec2 slanted;
    int64_t a = 0;
    for (const Vec2 &r : rows) {
        if (r.y != 0) {
            slanted = r.y < 0 ? -r : r;
        } else {
            a = std::gcd(a, std::abs(r.x));
        }
    }
    IntegerLattice l;
    if (a > 0 && slanted.y > 0) {
        l.basis_ = {{a, 0}, {floor_mod(slanted.x, a), slanted.y}};
    } else if (slanted.y > 0) {
        l.basis_ = {slanted};
    } else if (a > 0) {
        l.basis_ = {{a, 0}};
    }
    return l;
}

IntegerLattice lattice_from_generators(const std::vector<Vec2> &gens) {
    return IntegerLattice::from_generators(gens);
}

std::optional<int64_t> IntegerLattice::index() const {
    if (rank() != 2) {
        return std::nullopt;
    }
    return basis_[0].x * basis_[1].y;
}

bool IntegerLattice::contains(Vec2 v) const {
    switch (rank()) {
        case 0:
            return v.is_zero();
        case 1: {
            Vec2 b = basis_[0];
            if (b.y == 0) {
                return v.y == 0 && v.x % b.x == 0;
            }
            return v.y % b.y == 0 && v.x == (v.y / b.y) * b.x;
        }
        default: {
            int64_t a = basis_[0].x, b = basis_[1].x, c = basis_[1].y;
            if (v.y % c != 0) {
                return false;
            }
            return (v.x - (v.y / c) * b) % a == 0;
        }
    }
}

bool IntegerLattice::preserves_parity() const {
    return std::none_of(basis_.begin(), basis_.end(), [](const Vec2 &v) { return v.odd_parity(); });
}

Vec2 IntegerLattice::reduce(Vec2 site) const {
    if (rank() != 2) {
        throw DegenerateLattice("coset reduction needs a rank-2 lattice, got rank " + std::to_string(rank()));
    }
    int64_t a = basis_[0].x, b = basis_[1].x, c = basis_[1].y;
    int64_t k = floor_div(site.y, c);
    return {floor_mod(site.x - k * b, a), site.y - k * c};
}

std::string IntegerLattice::str() const {
    std::string out = "{";
    for (size_t i = 0; i < basis_.size(); i++) {
        if (i) {
            out += ",";
        }
        out += basis_[i].str();
    }
    return out + "}";
}

int64_t ancilla_coset_count(const IntegerLattice &l) {
    if (l.rank() != 2) {
        throw DegenerateLattice("lattice has rank " + std::to_string(l.rank()) +
                                "; ancilla cosets are infinite in number");
    }
    if (!l.preserves_parity()) {
        throw std::domain_error("lattice " + l.str() + " has a generator with odd coordinate sum");
    }
    return *l.index() / 2;
}

Vec2 coset_label(const IntegerLattice &l, Vec2 site) {
    return l.reduce(site);
}

Realization reconstruct_word(const std::vector<Vec2> &offsets) {
    Realization r;
    r.ordering = offsets;
    if (offsets.empty()) {
        r.reason = "empty offset list";
        return r;
    }
    if (!is_cardinal(offsets[0])) {
        r.reason = "first offset " + offsets[0].str() + " is not a cardinal step";
        return r;
    }
    std::vector<Dir> letters{to_dir(offsets[0])};
    Vec2 d = offsets[0];
    for (size_t j = 0; j + 1 < offsets.size(); j++) {
        Vec2 delta = offsets[j + 1] - offsets[j];
        if (!in_two_step_alphabet(delta)) {
            r.reason = "difference " + delta.str() + " between offsets " + std::to_string(j + 1) + " and " +
                       std::to_string(j + 2) + " is not a sum of two cardinal steps";
            r.position = j + 1;
            return r;
        }
        Vec2 next = delta - d;
        if (!is_cardinal(next)) {
            r.reason = "recursion gives non-cardinal step " + next.str() + " at letter " + std::to_string(j + 2);
            r.position = j + 1;
            return r;
        }
        letters.push_back(to_dir(next));
        d = next;
    }
    r.word = DirectionWord(std::move(letters));
    return r;
}

namespace {

struct RouteSearch {
    const std::vector<Vec2> &points;
    std::vector<bool> used;
    std::vector<Vec2> order;
    std::vector<Dir> letters;

    bool extend() {
        if (order.size() == points.size()) {
            return true;
        }
        Vec2 last = order.back();
        Vec2 d = step(letters.back());
        for (size_t i = 0; i < points.size(); i++) {
            if (used[i]) {
                continue;
            }
            Vec2 delta = points[i] - last;
            if (!in_two_step_alphabet(delta) || !is_cardinal(delta - d)) {
                continue;
            }
            used[i] = true;
            order.push_back(points[i]);
            letters.push_back(to_dir(delta - d));
            if (extend()) {
                return true;
            }
            letters.pop_back();
            order.pop_back();
            used[i] = false;
        }
        return false;
    }
};

}  // namespace

Realization is_realizable(const std::vector<Vec2> &offsets, size_t max_size) {
    std::vector<Vec2> points(offsets);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() > max_size) {
        throw std::length_error("offset set of size " + std::to_string(points.size()) +
                                " exceeds the realizability search bound " + std::to_string(max_size));
    }
    Realization r;
    if (points.empty()) {
        r.reason = "empty offset set";
        return r;
    }
    if (std::none_of(points.begin(), points.end(), is_cardinal)) {
        r.reason = "no cardinal first offset";
        return r;
    }
    for (size_t i = 0; i < points.size(); i++) {
        if (!points[i].odd_parity()) {
            r.reason = "offset " + points[i].str() + " has even coordinate sum";
            r.position = i;
            return r;
        }
    }
    RouteSearch search{points, std::vector<bool>(points.size(), false), {}, {}};
    for (size_t i = 0; i < points.size(); i++) {
        if (!is_cardinal(points[i])) {
            continue;
        }
        search.used[i] = true;
        search.order = {points[i]};
        search.letters = {to_dir(points[i])};
        if (search.extend()) {
            r.word = DirectionWord(search.letters);
            r.ordering = search.order;
            return r;
        }
        search.used[i] = false;
    }
    r.reason = "search exhausted";
    return r;
}

RectangleBound admissible_rectangle_bound(const SupportPattern &p) {
    // D(W) is symmetric, so D +- D reaches exactly twice the extent of D.
    int64_t max_x = 0, max_y = 0;
    const auto &q = p.offsets;
    for (size_t j = 0; j < q.size(); j++) {
        for (size_t i = 0; i < j; i++) {
            max_x = std::max(max_x, std::abs(q[j].x - q[i].x));
            max_y = std::max(max_y, std::abs(q[j].y - q[i].y));
        }
    }
    auto next_even_above = [](int64_t m) { return (m + 1) % 2 == 0 ? m + 1 : m + 2; };
    return {next_even_above(2 * max_x), next_even_above(2 * max_y)};
}

bool offsets_distinct_mod(const SupportPattern &p, int64_t lx, int64_t ly) {
    std::set<Vec2> seen;
    for (const Vec2 &q : p.offsets) {
        if (!seen.insert({floor_mod(q.x, lx), floor_mod(q.y, ly)}).second) {
            return false;
        }
    }
    return true;
}

}  // namespace dircode

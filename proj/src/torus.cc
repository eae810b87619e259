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

#include <algorithm>
#include <set>

#include "dircode/distance.h"

namespace dircode {

CheckerboardTorus::CheckerboardTorus(int64_t lx, int64_t ly) : lx_(lx), ly_(ly) {
    if (lx < 2 || ly < 2 || lx % 2 != 0 || ly % 2 != 0) {
        throw std::invalid_argument("torus sides must be even and at least 2, got " + std::to_string(lx) + "x" +
                                    std::to_string(ly));
    }
}

Vec2 CheckerboardTorus::wrap(Vec2 site) const {
    return {floor_mod(site.x, lx_), floor_mod(site.y, ly_)};
}

bool CheckerboardTorus::is_data(Vec2 site) const {
    return !site.odd_parity();
}

size_t CheckerboardTorus::data_index(Vec2 site) const {
    Vec2 s = wrap(site);
    if (!is_data(s)) {
        throw std::invalid_argument("site " + s.str() + " is an ancilla site");
    }
    return static_cast<size_t>(s.y * (lx_ / 2) + s.x / 2);
}

size_t CheckerboardTorus::ancilla_index(Vec2 site) const {
    Vec2 s = wrap(site);
    if (is_data(s)) {
        throw std::invalid_argument("site " + s.str() + " is a data site");
    }
    return static_cast<size_t>(s.y * (lx_ / 2) + s.x / 2);
}

Vec2 CheckerboardTorus::data_site(size_t index) const {
    if (index >= n()) {
        throw std::out_of_range("data index " + std::to_string(index) + " out of range");
    }
    int64_t half = lx_ / 2;
    int64_t y = static_cast<int64_t>(index) / half;
    int64_t x = 2 * (static_cast<int64_t>(index) % half) + (y % 2);
    return {x, y};
}

Vec2 CheckerboardTorus::ancilla_site(size_t index) const {
    if (index >= n()) {
        throw std::out_of_range("ancilla index " + std::to_string(index) + " out of range");
    }
    int64_t half = lx_ / 2;
    int64_t y = static_cast<int64_t>(index) / half;
    int64_t x = 2 * (static_cast<int64_t>(index) % half) + 1 - (y % 2);
    return {x, y};
}

char check_letter(CheckType t) {
    return t == CheckType::X ? 'X' : 'Z';
}

std::string Layout::descriptor() const {
    switch (kind) {
        case Kind::RowAlternating:
            return "row-alt";
        case Kind::CosetConstant: {
            std::string out = "coset:";
            for (uint8_t b : coset_bits) {
                out.push_back(b ? '1' : '0');
            }
            return out;
        }
        case Kind::Custom:
            break;
    }
    return "custom";
}

size_t Layout::count(CheckType t) const {
    return static_cast<size_t>(std::count(assignment.begin(), assignment.end(), t));
}

Layout row_alternating_layout(const CheckerboardTorus &t) {
    Layout lay;
    lay.kind = Layout::Kind::RowAlternating;
    lay.assignment.resize(t.n());
    for (size_t a = 0; a < t.n(); a++) {
        lay.assignment[a] = t.ancilla_site(a).y % 2 == 0 ? CheckType::X : CheckType::Z;
    }
    return lay;
}

CosetStructure::CosetStructure(const CheckerboardTorus &t, const IntegerLattice &l) : lattice_(l) {
    int64_t count = ancilla_coset_count(l);
    if (!l.contains({t.lx(), 0}) || !l.contains({0, t.ly()})) {
        throw IncompatibleTorus("lattice " + l.str() + " does not contain the torus periods (" +
                                std::to_string(t.lx()) + ",0) and (0," + std::to_string(t.ly()) +
                                "); its cosets are not defined on this torus");
    }
    std::vector<Vec2> raw(t.n());
    for (size_t a = 0; a < t.n(); a++) {
        raw[a] = l.reduce(t.ancilla_site(a));
    }
    labels_ = raw;
    auto by_row = [](const Vec2 &p, const Vec2 &q) { return std::pair(p.y, p.x) < std::pair(q.y, q.x); };
    std::sort(labels_.begin(), labels_.end(), by_row);
    labels_.erase(std::unique(labels_.begin(), labels_.end()), labels_.end());
    if (static_cast<int64_t>(labels_.size()) != count) {
        throw std::logic_error("coset count mismatch on torus");
    }
    coset_of_ancilla_.resize(t.n());
    for (size_t a = 0; a < t.n(); a++) {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), raw[a], by_row);
        coset_of_ancilla_[a] = static_cast<size_t>(it - labels_.begin());
    }
}

size_t CosetStructure::coset_of_site(Vec2 site) const {
    if (!site.odd_parity()) {
        throw std::invalid_argument("site " + site.str() + " is a data site");
    }
    Vec2 r = lattice_.reduce(site);
    auto by_row = [](const Vec2 &p, const Vec2 &q) { return std::pair(p.y, p.x) < std::pair(q.y, q.x); };
    auto it = std::lower_bound(labels_.begin(), labels_.end(), r, by_row);
    return static_cast<size_t>(it - labels_.begin());
}

std::vector<std::vector<size_t>> CosetStructure::translation_permutations() const {
    int64_t a = lattice_.basis()[0].x;
    int64_t c = lattice_.basis()[1].y;
    std::set<std::vector<size_t>> perms;
    for (int64_t j = 0; j < c; j++) {
        for (int64_t i = 0; i < a; i++) {
            if ((i + j) % 2 != 0) {
                continue;
            }
            std::vector<size_t> pi(labels_.size());
            for (size_t k = 0; k < labels_.size(); k++) {
                pi[k] = coset_of_site(labels_[k] + Vec2{i, j});
            }
            perms.insert(std::move(pi));
        }
    }
    return {perms.begin(), perms.end()};
}

IntegerLattice torus_lattice(const CheckerboardTorus &t, const IntegerLattice &l) {
    std::vector<Vec2> gens = l.basis();
    gens.push_back({t.lx(), 0});
    gens.push_back({0, t.ly()});
    return IntegerLattice::from_generators(gens);
}

Layout coset_layout(const CheckerboardTorus &t, const CosetStructure &cosets, std::vector<uint8_t> bits) {
    if (bits.size() != cosets.coset_count()) {
        throw std::invalid_argument("layout has " + std::to_string(bits.size()) + " coset bits but the lattice has " +
                                    std::to_string(cosets.coset_count()) + " ancilla cosets");
    }
    Layout lay;
    lay.kind = Layout::Kind::CosetConstant;
    lay.assignment.resize(t.n());
    for (size_t a = 0; a < t.n(); a++) {
        lay.assignment[a] = bits[cosets.coset_of_ancilla(a)] ? CheckType::Z : CheckType::X;
    }
    lay.coset_bits = std::move(bits);
    return lay;
}

Layout parse_coset_layout(const CheckerboardTorus &t, const CosetStructure &cosets, const std::string &descriptor) {
    const std::string prefix = "coset:";
    if (descriptor.rfind(prefix, 0) != 0) {
        throw std::invalid_argument("layout '" + descriptor + "' is not of the form coset:<bits>");
    }
    std::vector<uint8_t> bits;
    for (char ch : descriptor.substr(prefix.size())) {
        if (ch != '0' && ch != '1') {
            throw std::invalid_argument("coset layout bits must be 0 or 1, got '" + std::string(1, ch) + "'");
        }
        bits.push_back(static_cast<uint8_t>(ch - '0'));
    }
    return coset_layout(t, cosets, std::move(bits));
}

std::vector<Layout> enumerate_coset_layouts(const CheckerboardTorus &t, const IntegerLattice &l) {
    CosetStructure cosets(t, l);
    size_t c = cosets.coset_count();
    if (c > 24) {
        throw std::length_error("lattice has " + std::to_string(c) + " ancilla cosets; too many layouts to enumerate");
    }
    std::vector<Layout> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << (c - 1)); mask++) {
        std::vector<uint8_t> bits(c, 0);
        for (size_t i = 1; i < c; i++) {
            bits[i] = static_cast<uint8_t>((mask >> (i - 1)) & 1);
        }
        out.push_back(coset_layout(t, cosets, std::move(bits)));
    }
    return out;
}

Layout canonical_layout(const CheckerboardTorus &t, const CosetStructure &cosets, const Layout &lay) {
    if (lay.kind != Layout::Kind::CosetConstant || lay.coset_bits.size() != cosets.coset_count()) {
        throw std::invalid_argument("canonical_layout needs a coset-constant layout on the same cosets");
    }
    std::vector<uint8_t> best;
    for (const auto &pi : cosets.translation_permutations()) {
        std::vector<uint8_t> b(pi.size());
        for (size_t i = 0; i < pi.size(); i++) {
            b[i] = lay.coset_bits[pi[i]];
        }
        if (b[0]) {
            for (uint8_t &x : b) {
                x ^= 1;
            }
        }
        if (best.empty() || b < best) {
            best = std::move(b);
        }
    }
    return coset_layout(t, cosets, std::move(best));
}

CodeInstance build_code(const DirectionWord &w, const CheckerboardTorus &t, const Layout &lay,
                        const BuildOptions &options) {
    if (lay.assignment.size() != t.n()) {
        throw std::invalid_argument("layout covers " + std::to_string(lay.assignment.size()) +
                                    " ancillas but the torus has " + std::to_string(t.n()));
    }
    SupportPattern p = support_pattern(w);
    if (options.strict_wrap) {
        std::set<Vec2> plane(p.offsets.begin(), p.offsets.end());
        std::set<Vec2> wrapped;
        for (const Vec2 &q : plane) {
            wrapped.insert(t.wrap(q));
        }
        if (wrapped.size() < plane.size()) {
            throw WrapCollision("offsets of " + format_word(w) + " collide modulo the " + std::to_string(t.lx()) +
                                "x" + std::to_string(t.ly()) + " torus");
        }
    }
    CodeInstance c{w, t, lay, {}, {}, {}, {}, std::vector<size_t>(t.n())};
    std::vector<std::vector<size_t>> x_rows, z_rows;
    for (size_t a = 0; a < t.n(); a++) {
        Vec2 anchor = t.ancilla_site(a);
        std::vector<size_t> row;
        row.reserve(p.offsets.size());
        for (const Vec2 &q : p.offsets) {
            row.push_back(t.data_index(anchor + q));
        }
        if (lay.assignment[a] == CheckType::X) {
            c.row_of_ancilla[a] = x_rows.size();
            x_rows.push_back(std::move(row));
            c.x_anchors.push_back(anchor);
        } else {
            c.row_of_ancilla[a] = z_rows.size();
            z_rows.push_back(std::move(row));
            c.z_anchors.push_back(anchor);
        }
    }
    c.hx = BitMatrix::from_row_indices(t.n(), x_rows);
    c.hz = BitMatrix::from_row_indices(t.n(), z_rows);
    return c;
}

bool verify_commutation(const CodeInstance &c) {
    return mul_mod2(c.hx, c.hz.transpose()).is_zero();
}

std::string DistanceResult::str() const {
    switch (kind) {
        case Kind::Exact:
            return std::to_string(value);
        case Kind::GreaterThan:
            return ">" + std::to_string(value);
        case Kind::NotDefined:
            break;
    }
    return "-";
}

DistanceResult CodeParameters::d() const {
    using K = DistanceResult::Kind;
    if (dx.kind == K::NotDefined || dz.kind == K::NotDefined) {
        return DistanceResult::not_defined();
    }
    if (dx.kind == K::GreaterThan && dz.kind == K::GreaterThan) {
        return DistanceResult::greater_than(std::min(dx.value, dz.value));
    }
    if (dx.kind == K::Exact && dz.kind == K::Exact) {
        return DistanceResult::exact(std::min(dx.value, dz.value));
    }
    const DistanceResult &e = dx.kind == K::Exact ? dx : dz;
    const DistanceResult &g = dx.kind == K::Exact ? dz : dx;
    // A cutoff below the exact value leaves the minimum undetermined beyond it.
    return e.value <= g.value ? e : g;
}

namespace {

DistanceResult screen(const BitMatrix &check, const BitMatrix &stabilizers, size_t w_max, int threads) {
    LogicalSearch s(check, stabilizers);
    if (auto hit = find_min_logical(s, w_max, threads)) {
        return DistanceResult::exact(hit->weight);
    }
    return DistanceResult::greater_than(w_max);
}

}  // namespace

CodeParameters code_parameters(const CodeInstance &c, size_t w_max, int threads) {
    if (!verify_commutation(c)) {
        throw NonCommutingCode(format_word(c.word) + " with layout " + c.layout.descriptor() + " on " +
                               std::to_string(c.torus.lx()) + "x" + std::to_string(c.torus.ly()) +
                               " has anticommuting X and Z checks");
    }
    CodeParameters p;
    p.n = c.torus.n();
    p.rank_x = rank(c.hx);
    p.rank_z = rank(c.hz);
    p.k = p.n - p.rank_x - p.rank_z;
    p.k_from_dependencies = left_kernel_dim(c.hx) + left_kernel_dim(c.hz);
    if (p.k == 0) {
        p.dx = p.dz = DistanceResult::not_defined();
        return p;
    }
    p.dx = screen(c.hz, c.hx, w_max, threads);
    p.dz = screen(c.hx, c.hz, w_max, threads);
    return p;
}

namespace {

bool classes_cancel(const std::vector<int> &y_residues, const std::vector<int> &classes) {
    for (int y = 0; y < 6; y++) {
        size_t hits = 0;
        for (int q : y_residues) {
            int anchor = static_cast<int>(floor_mod(y - q, 6));
            hits += std::count(classes.begin(), classes.end(), anchor) > 0;
        }
        if (hits % 2 != 0) {
            return false;
        }
    }
    return true;
}

std::vector<size_t> rows_in_classes(const std::vector<Vec2> &anchors, const std::vector<int> &classes) {
    std::vector<size_t> out;
    for (size_t r = 0; r < anchors.size(); r++) {
        int y = static_cast<int>(floor_mod(anchors[r].y, 6));
        if (std::count(classes.begin(), classes.end(), y)) {
            out.push_back(r);
        }
    }
    return out;
}

bool relations_hold(const BitMatrix &h, const std::vector<std::vector<size_t>> &relations) {
    for (const auto &rel : relations) {
        BitVector sum(h.cols());
        for (size_t r : rel) {
            sum ^= h.row(r);
        }
        if (rel.empty() || !sum.is_zero()) {
            return false;
        }
    }
    return rank(BitMatrix::from_row_indices(h.rows(), relations)) == relations.size();
}

}  // namespace

DependencyCertificate dependency_certificate(const DirectionWord &w, const CheckerboardTorus &t) {
    if (t.ly() % 6 != 0) {
        throw CertificateNotApplicable("6 does not divide L_y = " + std::to_string(t.ly()));
    }
    std::vector<int> residues;
    for (const Vec2 &q : support_pattern(w).offsets) {
        residues.push_back(static_cast<int>(floor_mod(q.y, 6)));
    }
    DependencyCertificate cert;
    cert.x_classes = {{0, 2}, {0, 4}};
    cert.z_classes = {{1, 3}, {1, 5}};
    for (const auto *group : {&cert.x_classes, &cert.z_classes}) {
        for (const auto &cls : *group) {
            if (!classes_cancel(residues, cls)) {
                throw CertificateNotApplicable("y-offsets of " + format_word(w) +
                                               " do not cover each row an even number of times from anchor rows " +
                                               std::to_string(cls[0]) + "," + std::to_string(cls[1]) + " mod 6");
            }
        }
    }
    CodeInstance c = build_code(w, t, row_alternating_layout(t));
    for (const auto &cls : cert.x_classes) {
        cert.x_relations.push_back(rows_in_classes(c.x_anchors, cls));
    }
    for (const auto &cls : cert.z_classes) {
        cert.z_relations.push_back(rows_in_classes(c.z_anchors, cls));
    }
    cert.verified = relations_hold(c.hx, cert.x_relations) && relations_hold(c.hz, cert.z_relations);
    return cert;
}

std::vector<size_t> motif_operator(const CheckerboardTorus &t, Vec2 p, Vec2 r, Vec2 tvec, size_t m) {
    if (p.odd_parity()) {
        throw std::invalid_argument("motif base " + p.str() + " is not a data site");
    }
    if (r.odd_parity() || tvec.odd_parity()) {
        throw std::invalid_argument("motif offsets must have even coordinate sum");
    }
    if (m == 0) {
        throw std::invalid_argument("motif repetition count must be positive");
    }
    BitVector v(t.n());
    for (size_t j = 0; j < m; j++) {
        Vec2 shift = tvec * static_cast<int64_t>(j);
        v.flip(t.data_index(p + shift));
        v.flip(t.data_index(p + r + shift));
    }
    return v.ones();
}

bool motif_commutes(const CodeInstance &c, const std::vector<size_t> &support, CheckType pauli) {
    const BitMatrix &opposite = pauli == CheckType::X ? c.hz : c.hx;
    return mul_mod2(opposite, BitVector::from_indices(c.torus.n(), support)).is_zero();
}

std::vector<MotifSite> find_motif_sites(const CodeInstance &c, size_t m, Vec2 r, Vec2 tvec) {
    Echelon ex = row_reduce(c.hx);
    Echelon ez = row_reduce(c.hz);
    std::vector<MotifSite> out;
    for (CheckType pauli : {CheckType::X, CheckType::Z}) {
        const Echelon &same = pauli == CheckType::X ? ex : ez;
        for (size_t i = 0; i < c.torus.n(); i++) {
            Vec2 p = c.torus.data_site(i);
            auto support = motif_operator(c.torus, p, r, tvec, m);
            if (!motif_commutes(c, support, pauli)) {
                continue;
            }
            bool nontrivial = !in_row_space(same, BitVector::from_indices(c.torus.n(), support));
            out.push_back({p, pauli, nontrivial});
        }
    }
    return out;
}

}  // namespace dircode

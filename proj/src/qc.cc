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

#include "dircode/qc.h"

#include <stdexcept>

#include "dircode/pattern.h"

namespace dircode {

RingSpec::RingSpec(size_t a_, size_t b_) : a(a_), b(b_) {
    if (a == 0 || b == 0) {
        throw std::invalid_argument("ring periods must be positive");
    }
}

RingSpec RingSpec::for_torus(const CheckerboardTorus &t) {
    return RingSpec(static_cast<size_t>(t.lx() / 2), static_cast<size_t>(t.ly() / 2));
}

RingElement::RingElement(RingSpec r) : spec_(r), coeffs_(r.size(), 0) {
}

RingElement RingElement::one(RingSpec r) {
    return monomial(r, 0, 0);
}

RingElement RingElement::monomial(RingSpec r, int64_t i, int64_t j) {
    RingElement e(r);
    e.flip(static_cast<size_t>(floor_mod(i, static_cast<int64_t>(r.a))),
           static_cast<size_t>(floor_mod(j, static_cast<int64_t>(r.b))));
    return e;
}

RingElement RingElement::horizontal_sum(RingSpec r) {
    RingElement e(r);
    for (size_t i = 0; i < r.a; i++) {
        e.flip(i, 0);
    }
    return e;
}

bool RingElement::is_zero() const {
    return weight() == 0;
}

size_t RingElement::weight() const {
    size_t w = 0;
    for (uint8_t c : coeffs_) {
        w += c;
    }
    return w;
}

RingElement &RingElement::operator+=(const RingElement &o) {
    if (!(spec_ == o.spec_)) {
        throw std::invalid_argument("ring mismatch in addition");
    }
    for (size_t k = 0; k < coeffs_.size(); k++) {
        coeffs_[k] ^= o.coeffs_[k];
    }
    return *this;
}

std::string RingElement::str() const {
    std::string out;
    for (size_t j = 0; j < spec_.b; j++) {
        for (size_t i = 0; i < spec_.a; i++) {
            if (!get(i, j)) {
                continue;
            }
            std::string term;
            auto factor = [&term](char var, size_t e) {
                if (e == 0) {
                    return;
                }
                if (!term.empty()) {
                    term += "*";
                }
                term.push_back(var);
                if (e > 1) {
                    term += "^" + std::to_string(e);
                }
            };
            factor('u', i);
            factor('v', j);
            if (!out.empty()) {
                out += " + ";
            }
            out += term.empty() ? "1" : term;
        }
    }
    return out.empty() ? "0" : out;
}

RingElement ring_mul(const RingElement &x, const RingElement &y) {
    if (!(x.spec() == y.spec())) {
        throw std::invalid_argument("ring mismatch in multiplication");
    }
    const RingSpec r = x.spec();
    RingElement out(r);
    for (size_t j1 = 0; j1 < r.b; j1++) {
        for (size_t i1 = 0; i1 < r.a; i1++) {
            if (!x.get(i1, j1)) {
                continue;
            }
            for (size_t j2 = 0; j2 < r.b; j2++) {
                for (size_t i2 = 0; i2 < r.a; i2++) {
                    if (y.get(i2, j2)) {
                        out.flip((i1 + i2) % r.a, (j1 + j2) % r.b);
                    }
                }
            }
        }
    }
    return out;
}

namespace {

QcVector split_from_base(const DirectionWord &w, RingSpec r, Vec2 base) {
    QcVector v{RingElement(r), RingElement(r)};
    for (const Vec2 &q : support_pattern(w).offsets) {
        Vec2 target = base + q;
        // Data sites split into (even, even) = q0 + 2G and (odd, odd) = q1 + 2G.
        bool odd = floor_mod(target.x, 2) == 1;
        Vec2 coset = odd ? Vec2{1, 1} : Vec2{0, 0};
        Vec2 delta = target - coset;
        RingElement m = RingElement::monomial(r, floor_div(delta.x, 2), floor_div(delta.y, 2));
        (odd ? v.h1 : v.h0) += m;
    }
    return v;
}

}  // namespace

QcCheckVectors qc_check_vectors(const DirectionWord &w, RingSpec r) {
    return {split_from_base(w, r, {1, 0}), split_from_base(w, r, {0, 1})};
}

BitVector qc_expand(const QcVector &v, const RingElement &f, const CheckerboardTorus &t) {
    RingSpec r = RingSpec::for_torus(t);
    if (!(v.h0.spec() == r) || !(f.spec() == r)) {
        throw std::invalid_argument("ring does not match the torus");
    }
    RingElement p0 = ring_mul(f, v.h0);
    RingElement p1 = ring_mul(f, v.h1);
    BitVector out(t.n());
    for (size_t j = 0; j < r.b; j++) {
        for (size_t i = 0; i < r.a; i++) {
            Vec2 cell{2 * static_cast<int64_t>(i), 2 * static_cast<int64_t>(j)};
            if (p0.get(i, j)) {
                out.flip(t.data_index(cell));
            }
            if (p1.get(i, j)) {
                out.flip(t.data_index(cell + Vec2{1, 1}));
            }
        }
    }
    return out;
}

size_t annihilator_dim(const QcVector &v) {
    const RingSpec r = v.h0.spec();
    if (!(v.h1.spec() == r)) {
        throw std::invalid_argument("ring mismatch in QC vector");
    }
    const size_t n = r.size();
    // Row (i, j) is u^i v^j (h0, h1).
    BitMatrix m(n, 2 * n);
    for (size_t j = 0; j < r.b; j++) {
        for (size_t i = 0; i < r.a; i++) {
            RingElement mono = RingElement::monomial(r, static_cast<int64_t>(i), static_cast<int64_t>(j));
            RingElement p0 = ring_mul(mono, v.h0);
            RingElement p1 = ring_mul(mono, v.h1);
            size_t row = j * r.a + i;
            for (size_t jj = 0; jj < r.b; jj++) {
                for (size_t ii = 0; ii < r.a; ii++) {
                    size_t col = jj * r.a + ii;
                    if (p0.get(ii, jj)) {
                        m.set(row, col, true);
                    }
                    if (p1.get(ii, jj)) {
                        m.set(row, n + col, true);
                    }
                }
            }
        }
    }
    return left_kernel_dim(m);
}

size_t predicted_k(const DirectionWord &w, RingSpec r) {
    QcCheckVectors qv = qc_check_vectors(w, r);
    return annihilator_dim(qv.x_vector) + annihilator_dim(qv.z_vector);
}

namespace {

using Poly = std::vector<uint8_t>;

void trim(Poly &p) {
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

Poly poly_mod(Poly x, const Poly &m) {
    trim(x);
    const size_t dm = m.size() - 1;
    while (x.size() >= m.size()) {
        size_t shift = x.size() - 1 - dm;
        for (size_t k = 0; k <= dm; k++) {
            x[shift + k] ^= m[k];
        }
        trim(x);
    }
    return x;
}

}  // namespace

size_t poly_gcd_degree(size_t m) {
    if (m == 0) {
        throw std::invalid_argument("poly_gcd_degree needs m >= 1");
    }
    Poly x(m + 1, 0);
    x[0] = x[m] = 1;
    Poly y{1, 1, 1};
    while (!y.empty()) {
        Poly rem = poly_mod(x, y);
        x = std::move(y);
        y = std::move(rem);
    }
    return x.size() - 1;
}

size_t collapse_k(size_t d) {
    if (d < 2 || d % 2 != 0) {
        throw std::invalid_argument("collapse_k needs an even d >= 2, got " + std::to_string(d));
    }
    return 2 * poly_gcd_degree(d / 2);
}

SuReport su_reduction_check(const DirectionWord &w, RingSpec r) {
    QcVector xv = qc_check_vectors(w, r).x_vector;
    RingElement su = RingElement::horizontal_sum(r);
    RingElement trinomial = RingElement::one(r) + RingElement::monomial(r, 0, 1) + RingElement::monomial(r, 0, 2);
    SuReport rep{ring_mul(su, xv.h0), ring_mul(su, xv.h1), ring_mul(su, trinomial)};
    rep.h0_annihilated = rep.su_h0.is_zero();
    rep.h1_matches_reference = rep.su_h1 == rep.su_reference;
    return rep;
}

QcCrossCheck qc_cross_check(const DirectionWord &w, const CheckerboardTorus &t) {
    QcCheckVectors qv = qc_check_vectors(w, RingSpec::for_torus(t));
    CodeInstance c = build_code(w, t, row_alternating_layout(t));
    QcCrossCheck out;
    out.ann_x = annihilator_dim(qv.x_vector);
    out.ann_z = annihilator_dim(qv.z_vector);
    out.left_kernel_x = left_kernel_dim(c.hx);
    out.left_kernel_z = left_kernel_dim(c.hz);
    out.commuting = verify_commutation(c);
    return out;
}

}  // namespace dircode

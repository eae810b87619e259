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

#ifndef DIRCODE_QC_H
#define DIRCODE_QC_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dircode/gf2.h"
#include "dircode/torus.h"
#include "dircode/word.h"

namespace dircode {

/// F2[u, v] / (u^a - 1, v^b - 1). On an Lx x Ly torus, a = Lx/2 and b = Ly/2:
/// u and v are translations by (2,0) and (0,2). Some texts write X, Y for
/// the same two variables.
struct RingSpec {
    size_t a = 1;
    size_t b = 1;

    RingSpec() = default;
    RingSpec(size_t a, size_t b);
    static RingSpec for_torus(const CheckerboardTorus &t);

    size_t size() const {
        return a * b;
    }
    bool operator==(const RingSpec &) const = default;
};

/// Dense coefficient grid; coefficient (i, j) belongs to u^i v^j.
class RingElement {
   public:
    explicit RingElement(RingSpec r);

    static RingElement zero(RingSpec r) {
        return RingElement(r);
    }
    static RingElement one(RingSpec r);
    /// u^i v^j with exponents reduced mod (a, b); negative exponents allowed.
    static RingElement monomial(RingSpec r, int64_t i, int64_t j);
    /// Sum of u^i over all i.
    static RingElement horizontal_sum(RingSpec r);

    const RingSpec &spec() const {
        return spec_;
    }
    bool get(size_t i, size_t j) const {
        return coeffs_[j * spec_.a + i] != 0;
    }
    void flip(size_t i, size_t j) {
        coeffs_[j * spec_.a + i] ^= 1;
    }
    bool is_zero() const;
    size_t weight() const;

    RingElement &operator+=(const RingElement &o);
    friend RingElement operator+(RingElement x, const RingElement &y) {
        x += y;
        return x;
    }
    bool operator==(const RingElement &) const = default;

    /// "u*v + u^2*v + 1"-style text, terms sorted by (j, i); "0" when zero.
    std::string str() const;

   private:
    RingSpec spec_;
    std::vector<uint8_t> coeffs_;
};

/// Two-dimensional cyclic convolution mod 2. Throws std::invalid_argument on
/// a ring mismatch.
RingElement ring_mul(const RingElement &x, const RingElement &y);

/// Check row at base anchor, split by which of the two data cosets
/// q0 + 2G or q1 + 2G each target falls in (q0 = (0,0), q1 = (1,1)).
struct QcVector {
    RingElement h0;
    RingElement h1;
};

struct QcCheckVectors {
    /// From base anchor (1, 0).
    QcVector x_vector;
    /// From base anchor (0, 1).
    QcVector z_vector;
};

QcCheckVectors qc_check_vectors(const DirectionWord &w, RingSpec r);

/// Data vector of the check combination f: (f h0, f h1) laid out on the torus.
BitVector qc_expand(const QcVector &v, const RingElement &f, const CheckerboardTorus &t);

/// dim {f : f h0 = 0 and f h1 = 0}, as the kernel of the stacked
/// multiplication matrix.
size_t annihilator_dim(const QcVector &v);

/// k under row alternation: dim Ann(x_vector) + dim Ann(z_vector).
size_t predicted_k(const DirectionWord &w, RingSpec r);

/// deg gcd(1 + v + v^2, v^m - 1) over F2. Requires m >= 1.
size_t poly_gcd_degree(size_t m);

/// k of NE2NE2N on the (2d, d) torus in closed form. Requires d even, d >= 2.
size_t collapse_k(size_t d);

struct SuReport {
    RingElement su_h0;
    RingElement su_h1;
    /// S_u (1 + v + v^2).
    RingElement su_reference;
    bool h0_annihilated = false;
    bool h1_matches_reference = false;
};

/// S_u h0 and S_u h1 for the word's X vector, compared with the identities
/// S_u h0 = 0 and S_u h1 = S_u (1 + v + v^2).
SuReport su_reduction_check(const DirectionWord &w, RingSpec r);

/// Annihilator dimensions against left-kernel dimensions of the directly
/// built row-alternating code.
struct QcCrossCheck {
    size_t ann_x = 0;
    size_t ann_z = 0;
    size_t left_kernel_x = 0;
    size_t left_kernel_z = 0;
    bool commuting = false;

    bool agrees() const {
        return ann_x == left_kernel_x && ann_z == left_kernel_z;
    }
};

QcCrossCheck qc_cross_check(const DirectionWord &w, const CheckerboardTorus &t);

}  // namespace dircode

#endif

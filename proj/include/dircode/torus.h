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

#ifndef DIRCODE_TORUS_H
#define DIRCODE_TORUS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dircode/gf2.h"
#include "dircode/pattern.h"
#include "dircode/vec2.h"
#include "dircode/word.h"

namespace dircode {

/// Z_Lx x Z_Ly with data qubits on even-parity sites and ancillas on odd ones.
///
/// Both site classes are indexed row by row (y outer, x inner), skipping the
/// other class, so data and ancilla indices each run over 0..n-1.
class CheckerboardTorus {
   public:
    CheckerboardTorus(int64_t lx, int64_t ly);

    int64_t lx() const {
        return lx_;
    }
    int64_t ly() const {
        return ly_;
    }
    size_t n() const {
        return static_cast<size_t>(lx_ * ly_ / 2);
    }

    Vec2 wrap(Vec2 site) const;
    bool is_data(Vec2 site) const;

    size_t data_index(Vec2 site) const;
    size_t ancilla_index(Vec2 site) const;
    Vec2 data_site(size_t index) const;
    Vec2 ancilla_site(size_t index) const;

    bool operator==(const CheckerboardTorus &) const = default;

   private:
    int64_t lx_;
    int64_t ly_;
};

enum class CheckType : uint8_t { X = 0, Z = 1 };

char check_letter(CheckType t);

/// Assignment of a check type to every ancilla, indexed by ancilla index.
struct Layout {
    enum class Kind { RowAlternating, CosetConstant, Custom };

    Kind kind = Kind::Custom;
    std::vector<CheckType> assignment;
    /// Per-coset types (0 = X, 1 = Z) for coset-constant layouts, ordered as
    /// in CosetStructure::labels.
    std::vector<uint8_t> coset_bits;

    /// "row-alt", "coset:<bits>" or "custom".
    std::string descriptor() const;
    size_t count(CheckType t) const;
};

/// Ancilla y even -> X, y odd -> Z.
Layout row_alternating_layout(const CheckerboardTorus &t);

/// Raised when a lattice's cosets are not well defined on a torus.
class IncompatibleTorus : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// The ancilla cosets of a rank-2, parity-preserving lattice on a torus whose
/// periods lie in the lattice.
class CosetStructure {
   public:
    CosetStructure(const CheckerboardTorus &t, const IntegerLattice &l);

    size_t coset_count() const {
        return labels_.size();
    }
    /// Coset labels (lattice residues) in ascending order; coset i is labels()[i].
    const std::vector<Vec2> &labels() const {
        return labels_;
    }
    size_t coset_of_ancilla(size_t ancilla_index) const {
        return coset_of_ancilla_[ancilla_index];
    }
    size_t coset_of_site(Vec2 site) const;
    const IntegerLattice &lattice() const {
        return lattice_;
    }

    /// Distinct coset permutations pi induced by translations preserving the
    /// ancilla sublattice: pi[i] is the coset reached from coset i.
    std::vector<std::vector<size_t>> translation_permutations() const;

   private:
    IntegerLattice lattice_;
    std::vector<Vec2> labels_;
    std::vector<size_t> coset_of_ancilla_;
};

/// span(l, (Lx,0), (0,Ly)): the lattice whose cosets a layout must respect on
/// this torus. Always rank 2 and parity-preserving when l is.
IntegerLattice torus_lattice(const CheckerboardTorus &t, const IntegerLattice &l);

Layout coset_layout(const CheckerboardTorus &t, const CosetStructure &cosets, std::vector<uint8_t> bits);

/// Parses "coset:<bits>" against the given structure.
Layout parse_coset_layout(const CheckerboardTorus &t, const CosetStructure &cosets, const std::string &descriptor);

/// All 2^(c-1) coset-constant layouts with coset 0 fixed to X (one per
/// global-swap class).
std::vector<Layout> enumerate_coset_layouts(const CheckerboardTorus &t, const IntegerLattice &l);

/// Minimum over translated labelings, each normalized so coset 0 is X.
Layout canonical_layout(const CheckerboardTorus &t, const CosetStructure &cosets, const Layout &lay);

struct BuildOptions {
    /// Reject instances where wrap-around merges distinct offsets.
    bool strict_wrap = false;
};

class WrapCollision : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// A realized directional CSS code.
struct CodeInstance {
    DirectionWord word;
    CheckerboardTorus torus;
    Layout layout;
    BitMatrix hx;
    BitMatrix hz;
    std::vector<Vec2> x_anchors;
    std::vector<Vec2> z_anchors;
    /// Ancilla index -> row in hx or hz (per layout.assignment).
    std::vector<size_t> row_of_ancilla;
};

/// Row for anchor a is the indicator of a + P(W) mod torus; coincident
/// targets cancel mod 2.
CodeInstance build_code(const DirectionWord &w, const CheckerboardTorus &t, const Layout &lay,
                        const BuildOptions &options = {});

bool verify_commutation(const CodeInstance &c);

/// Outcome of a bounded minimum-weight search.
struct DistanceResult {
    enum class Kind { Exact, GreaterThan, NotDefined };
    Kind kind = Kind::NotDefined;
    size_t value = 0;

    static DistanceResult exact(size_t d) {
        return {Kind::Exact, d};
    }
    static DistanceResult greater_than(size_t cutoff) {
        return {Kind::GreaterThan, cutoff};
    }
    static DistanceResult not_defined() {
        return {};
    }
    /// "4", ">4" or "-".
    std::string str() const;
    bool operator==(const DistanceResult &) const = default;
};

struct CodeParameters {
    size_t n = 0;
    size_t k = 0;
    /// dim ker(H_X^T) + dim ker(H_Z^T); always equal to k for these codes.
    size_t k_from_dependencies = 0;
    size_t rank_x = 0;
    size_t rank_z = 0;
    DistanceResult dx;
    DistanceResult dz;

    /// min(d_X, d_Z) in the screening sense.
    DistanceResult d() const;
};

class NonCommutingCode : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Exact k by ranks plus a distance screen up to weight w_max. `threads` is
/// passed to the distance kernel (0 = OpenMP default).
CodeParameters code_parameters(const CodeInstance &c, size_t w_max, int threads = 0);

class CertificateNotApplicable : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Explicit stabilizer dependencies from residue classes of anchor rows mod 6.
struct DependencyCertificate {
    /// Anchor-row residue classes mod 6 used for each relation.
    std::vector<std::vector<int>> x_classes;
    std::vector<std::vector<int>> z_classes;
    /// Row indices (into hx / hz) of each relation.
    std::vector<std::vector<size_t>> x_relations;
    std::vector<std::vector<size_t>> z_relations;
    /// Every relation sums to zero and the relations of each type are
    /// linearly independent.
    bool verified = false;
};

/// Requires 6 | L_y and that the word's y-offsets hit every residue class
/// pair an even number of times; otherwise throws CertificateNotApplicable.
DependencyCertificate dependency_certificate(const DirectionWord &w, const CheckerboardTorus &t);

/// Sorted data indices of S(p) = {p + j t, p + r + j t : j < m}; coincident
/// sites cancel.
std::vector<size_t> motif_operator(const CheckerboardTorus &t, Vec2 p, Vec2 r = {4, 2}, Vec2 tvec = {12, 6},
                                   size_t m = 1);

/// True iff a Pauli of type `pauli` on `support` commutes with every check of
/// the opposite type.
bool motif_commutes(const CodeInstance &c, const std::vector<size_t> &support, CheckType pauli);

struct MotifSite {
    Vec2 p;
    CheckType pauli;
    /// Outside the same-type stabilizer space, so a genuine logical operator.
    bool nontrivial = false;
};

/// Every data site p whose motif commutes with the opposite-type checks, for
/// both Pauli types.
std::vector<MotifSite> find_motif_sites(const CodeInstance &c, size_t m, Vec2 r = {4, 2}, Vec2 tvec = {12, 6});

}  // namespace dircode

#endif

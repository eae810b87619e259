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

#ifndef DIRCODE_GF2_H
#define DIRCODE_GF2_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace dircode {

/// Dense bit vector over GF(2), packed into 64-bit words.
///
/// Bits past size() in the last word are always zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t size);

    static BitVector from_indices(size_t size, std::span<const size_t> ones);

    size_t size() const {
        return size_;
    }
    size_t num_words() const {
        return words_.size();
    }

    bool get(size_t i) const;
    void set(size_t i, bool value);
    void flip(size_t i);

    size_t weight() const;
    bool is_zero() const;
    std::vector<size_t> ones() const;

    /// Inner product mod 2.
    bool dot(const BitVector &other) const;

    BitVector &operator^=(const BitVector &other);
    bool operator==(const BitVector &other) const = default;

    std::span<const uint64_t> words() const {
        return words_;
    }

   private:
    size_t size_ = 0;
    std::vector<uint64_t> words_;
};

/// Row-major packed matrix over GF(2).
///
/// All algebra (rank, kernels, products) is exact and works on internal copies;
/// a BitMatrix is never modified by the free functions below.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols);

    static BitMatrix identity(size_t n);
    /// Builds a matrix whose row r has ones at row_indices[r]. Repeated
    /// indices cancel mod 2.
    static BitMatrix from_row_indices(size_t cols, const std::vector<std::vector<size_t>> &row_indices);
    static BitMatrix from_rows(size_t cols, std::span<const BitVector> rows);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    size_t words_per_row() const {
        return stride_;
    }

    bool get(size_t r, size_t c) const;
    void set(size_t r, size_t c, bool value);
    void flip(size_t r, size_t c);

    std::span<const uint64_t> row_words(size_t r) const;
    std::span<uint64_t> mutable_row_words(size_t r);
    BitVector row(size_t r) const;
    BitVector column(size_t c) const;
    /// Sorted column indices of the ones in row r.
    std::vector<size_t> row_support(size_t r) const;

    BitMatrix transpose() const;
    bool is_zero() const;
    bool operator==(const BitMatrix &other) const = default;

   private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t stride_ = 0;
    std::vector<uint64_t> data_;
};

size_t rank(const BitMatrix &m);

/// Basis of {x : m x = 0}; has cols - rank(m) elements.
std::vector<BitVector> right_kernel_basis(const BitMatrix &m);

/// dim {y : y^T m = 0} = rows - rank(m).
size_t left_kernel_dim(const BitMatrix &m);

/// True iff v is a GF(2) combination of rows of m, decided by comparing
/// rank(m) with the rank of m with v appended.
bool in_row_space(const BitMatrix &m, const BitVector &v);

BitMatrix mul_mod2(const BitMatrix &a, const BitMatrix &b);
BitVector mul_mod2(const BitMatrix &a, const BitVector &x);

/// Reduced row echelon form of a copy of m, together with pivot columns.
struct Echelon {
    BitMatrix reduced;
    std::vector<size_t> pivots;
};
Echelon row_reduce(const BitMatrix &m);

/// Membership in the row space of an already reduced matrix.
bool in_row_space(const Echelon &e, const BitVector &v);

}  // namespace dircode

#endif

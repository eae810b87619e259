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

#include "dircode/gf2.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace dircode {

namespace {

constexpr size_t kWordBits = 64;

size_t words_for(size_t bits) {
    return (bits + kWordBits - 1) / kWordBits;
}

void check_index(size_t i, size_t size, const char *what) {
    if (i >= size) {
        throw std::out_of_range(std::string(what) + " index " + std::to_string(i) + " out of range (size " +
                                std::to_string(size) + ")");
    }
}

}  // namespace

BitVector::BitVector(size_t size) : size_(size), words_(words_for(size), 0) {
}

BitVector BitVector::from_indices(size_t size, std::span<const size_t> ones) {
    BitVector v(size);
    for (size_t i : ones) {
        v.flip(i);
    }
    return v;
}

bool BitVector::get(size_t i) const {
    check_index(i, size_, "bit");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1;
}

void BitVector::set(size_t i, bool value) {
    check_index(i, size_, "bit");
    uint64_t mask = uint64_t{1} << (i % kWordBits);
    if (value) {
        words_[i / kWordBits] |= mask;
    } else {
        words_[i / kWordBits] &= ~mask;
    }
}

void BitVector::flip(size_t i) {
    check_index(i, size_, "bit");
    words_[i / kWordBits] ^= uint64_t{1} << (i % kWordBits);
}

size_t BitVector::weight() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVector::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

std::vector<size_t> BitVector::ones() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t w = words_[k];
        while (w) {
            out.push_back(k * kWordBits + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

bool BitVector::dot(const BitVector &other) const {
    if (other.size_ != size_) {
        throw std::invalid_argument("dot: length mismatch");
    }
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

BitVector &BitVector::operator^=(const BitVector &other) {
    if (other.size_ != size_) {
        throw std::invalid_argument("xor: length mismatch");
    }
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

BitMatrix::BitMatrix(size_t rows, size_t cols)
    : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * words_for(cols), 0) {
}

BitMatrix BitMatrix::identity(size_t n) {
    BitMatrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

BitMatrix BitMatrix::from_row_indices(size_t cols, const std::vector<std::vector<size_t>> &row_indices) {
    BitMatrix m(row_indices.size(), cols);
    for (size_t r = 0; r < row_indices.size(); r++) {
        for (size_t c : row_indices[r]) {
            m.flip(r, c);
        }
    }
    return m;
}

BitMatrix BitMatrix::from_rows(size_t cols, std::span<const BitVector> rows) {
    BitMatrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); r++) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("from_rows: row length mismatch");
        }
        std::copy(rows[r].words().begin(), rows[r].words().end(), m.data_.begin() + r * m.stride_);
    }
    return m;
}

bool BitMatrix::get(size_t r, size_t c) const {
    check_index(r, rows_, "row");
    check_index(c, cols_, "column");
    return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1;
}

void BitMatrix::set(size_t r, size_t c, bool value) {
    check_index(r, rows_, "row");
    check_index(c, cols_, "column");
    uint64_t mask = uint64_t{1} << (c % kWordBits);
    uint64_t &w = data_[r * stride_ + c / kWordBits];
    w = value ? (w | mask) : (w & ~mask);
}

void BitMatrix::flip(size_t r, size_t c) {
    check_index(r, rows_, "row");
    check_index(c, cols_, "column");
    data_[r * stride_ + c / kWordBits] ^= uint64_t{1} << (c % kWordBits);
}

std::span<const uint64_t> BitMatrix::row_words(size_t r) const {
    check_index(r, rows_, "row");
    return {data_.data() + r * stride_, stride_};
}

std::span<uint64_t> BitMatrix::mutable_row_words(size_t r) {
    check_index(r, rows_, "row");
    return {data_.data() + r * stride_, stride_};
}

BitVector BitMatrix::row(size_t r) const {
    auto ones = row_support(r);
    return BitVector::from_indices(cols_, ones);
}

BitVector BitMatrix::column(size_t c) const {
    check_index(c, cols_, "column");
    BitVector v(rows_);
    for (size_t r = 0; r < rows_; r++) {
        if ((data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1) {
            v.set(r, true);
        }
    }
    return v;
}

std::vector<size_t> BitMatrix::row_support(size_t r) const {
    std::vector<size_t> out;
    auto src = row_words(r);
    for (size_t k = 0; k < stride_; k++) {
        for (uint64_t w = src[k]; w; w &= w - 1) {
            out.push_back(k * kWordBits + std::countr_zero(w));
        }
    }
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix t(cols_, rows_);
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c : row_support(r)) {
            t.data_[c * t.stride_ + r / kWordBits] |= uint64_t{1} << (r % kWordBits);
        }
    }
    return t;
}

bool BitMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](uint64_t w) { return w == 0; });
}

Echelon row_reduce(const BitMatrix &m) {
    Echelon e{m, {}};
    BitMatrix &a = e.reduced;
    size_t rows = a.rows();
    size_t stride = a.words_per_row();
    size_t r = 0;
    for (size_t c = 0; c < a.cols() && r < rows; c++) {
        size_t word = c / kWordBits;
        uint64_t mask = uint64_t{1} << (c % kWordBits);
        size_t pivot = rows;
        for (size_t i = r; i < rows; i++) {
            if (a.row_words(i)[word] & mask) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != r) {
            auto pr = a.mutable_row_words(pivot);
            auto rr = a.mutable_row_words(r);
            std::swap_ranges(pr.begin(), pr.end(), rr.begin());
        }
        auto prow = a.row_words(r);
        for (size_t i = 0; i < rows; i++) {
            if (i == r) {
                continue;
            }
            auto dst = a.mutable_row_words(i);
            if (dst[word] & mask) {
                for (size_t k = word; k < stride; k++) {
                    dst[k] ^= prow[k];
                }
            }
        }
        e.pivots.push_back(c);
        r++;
    }
    return e;
}

size_t rank(const BitMatrix &m) {
    return row_reduce(m).pivots.size();
}

std::vector<BitVector> right_kernel_basis(const BitMatrix &m) {
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t p : e.pivots) {
        is_pivot[p] = true;
    }
    std::vector<BitVector> basis;
    for (size_t f = 0; f < m.cols(); f++) {
        if (is_pivot[f]) {
            continue;
        }
        BitVector v(m.cols());
        v.set(f, true);
        for (size_t i = 0; i < e.pivots.size(); i++) {
            if (e.reduced.get(i, f)) {
                v.set(e.pivots[i], true);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

size_t left_kernel_dim(const BitMatrix &m) {
    return m.rows() - rank(m);
}

bool in_row_space(const BitMatrix &m, const BitVector &v) {
    if (v.size() != m.cols()) {
        throw std::invalid_argument("in_row_space: vector length " + std::to_string(v.size()) +
                                    " does not match column count " + std::to_string(m.cols()));
    }
    BitMatrix extended(m.rows() + 1, m.cols());
    for (size_t r = 0; r < m.rows(); r++) {
        auto src = m.row_words(r);
        std::copy(src.begin(), src.end(), extended.mutable_row_words(r).begin());
    }
    std::copy(v.words().begin(), v.words().end(), extended.mutable_row_words(m.rows()).begin());
    return rank(extended) == rank(m);
}

bool in_row_space(const Echelon &e, const BitVector &v) {
    if (v.size() != e.reduced.cols()) {
        throw std::invalid_argument("in_row_space: vector length " + std::to_string(v.size()) +
                                    " does not match column count " + std::to_string(e.reduced.cols()));
    }
    BitVector r = v;
    for (size_t i = 0; i < e.pivots.size(); i++) {
        if (r.get(e.pivots[i])) {
            r ^= e.reduced.row(i);
        }
    }
    return r.is_zero();
}

BitMatrix mul_mod2(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("mul_mod2: dimension mismatch (" + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                                    std::to_string(b.cols()) + ")");
    }
    BitMatrix out(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); i++) {
        auto dst = out.mutable_row_words(i);
        for (size_t k : a.row_support(i)) {
            auto src = b.row_words(k);
            for (size_t w = 0; w < dst.size(); w++) {
                dst[w] ^= src[w];
            }
        }
    }
    return out;
}

BitVector mul_mod2(const BitMatrix &a, const BitVector &x) {
    if (a.cols() != x.size()) {
        throw std::invalid_argument("mul_mod2: vector length mismatch");
    }
    BitVector out(a.rows());
    auto xw = x.words();
    for (size_t i = 0; i < a.rows(); i++) {
        auto rw = a.row_words(i);
        uint64_t acc = 0;
        for (size_t k = 0; k < rw.size(); k++) {
            acc ^= rw[k] & xw[k];
        }
        if (std::popcount(acc) & 1) {
            out.set(i, true);
        }
    }
    return out;
}

}  // namespace dircode

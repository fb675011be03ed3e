// Copyright 2026 The recinfo Authors
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

#ifndef RECINFO_F2_HPP
#define RECINFO_F2_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace recinfo {

/// Bit-packed vector over the two-element field.
///
/// Padding bits past `size()` in the last word are always zero, so word-wise
/// comparisons and popcounts are exact.
class BitVector {
   public:
    using word_t = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t n) : size_(n), words_((n + kWordBits - 1) / kWordBits, 0) {}

    static BitVector from_indices(std::size_t n, std::span<const std::size_t> ones);

    std::size_t size() const { return size_; }
    std::size_t num_words() const { return words_.size(); }

    bool get(std::size_t i) const { return (words_[i / kWordBits] >> (i % kWordBits)) & 1u; }
    void set(std::size_t i, bool v = true) {
        word_t mask = word_t{1} << (i % kWordBits);
        if (v) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void flip(std::size_t i) { words_[i / kWordBits] ^= word_t{1} << (i % kWordBits); }

    BitVector& operator^=(const BitVector& other);
    BitVector& operator&=(const BitVector& other);
    BitVector& operator|=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
    friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
    bool operator==(const BitVector& other) const = default;
    bool operator<(const BitVector& other) const;

    bool any() const;
    bool none() const { return !any(); }
    std::size_t popcount() const;
    /// Index of the lowest set bit, or size() if the vector is zero.
    std::size_t first_one() const;
    /// Parity of the bitwise AND.
    bool dot(const BitVector& other) const;
    std::vector<std::size_t> ones() const;

    std::span<word_t> words() { return words_; }
    std::span<const word_t> words() const { return words_; }

    std::string str() const;

   private:
    std::size_t size_ = 0;
    std::vector<word_t> words_;
};

/// Dense bit-packed matrix over F2, row-major. Rows are vectors in F2^cols.
class BitMatrix {
   public:
    using word_t = BitVector::word_t;

    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);

    static BitMatrix identity(std::size_t n);
    static BitMatrix from_rows(std::size_t cols, std::span<const BitVector> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v = true) {
        word_t mask = word_t{1} << (c % 64);
        word_t& w = data_[r * stride_ + c / 64];
        w = v ? (w | mask) : (w & ~mask);
    }

    std::span<word_t> row_words(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::span<const word_t> row_words(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }

    BitVector row(std::size_t r) const;
    void set_row(std::size_t r, const BitVector& v);
    void append_row(const BitVector& v);
    /// row(dst) ^= row(src)
    void xor_row(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);
    bool row_is_zero(std::size_t r) const;

    BitMatrix select_rows(std::span<const std::size_t> idx) const;
    BitMatrix select_columns(std::span<const std::size_t> idx) const;
    /// Rows of `a` followed by rows of `b`; column counts must agree.
    static BitMatrix stack(const BitMatrix& a, const BitMatrix& b);
    BitMatrix transpose() const;
    /// Row-vector times matrix: returns sum of rows selected by `v`.
    BitVector combine_rows(const BitVector& v) const;

    bool operator==(const BitMatrix& other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<word_t> data_;
};

/// Incrementally built row space with echelon rows keyed by their lowest set
/// bit. Leftmost-column-first pivoting, first-inserted row wins.
class RowSpace {
   public:
    explicit RowSpace(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t dim() const { return rows_.size(); }

    /// Reduces `v` in place against the stored rows; the result is zero iff
    /// `v` was in the span.
    void reduce(BitVector& v) const;
    bool contains(BitVector v) const;
    /// Returns true if `v` was independent and got added.
    bool insert(BitVector v);
    void insert_all(const BitMatrix& m);

    BitMatrix basis() const;
    std::span<const std::size_t> pivots() const { return pivots_; }

   private:
    std::size_t cols_;
    std::vector<BitVector> rows_;      // sorted by pivot
    std::vector<std::size_t> pivots_;  // ascending
};

/// Reduced row-echelon data for a matrix, with the row combinations that
/// produced each reduced row.
struct Echelon {
    BitMatrix reduced;               // rank() rows, in pivot order
    std::vector<std::size_t> pivots; // pivot column of each reduced row
    BitMatrix combos;                // combos.row(i) selects input rows summing to reduced.row(i)
    BitMatrix kernel;                // basis of the left kernel
    std::size_t rank() const { return pivots.size(); }
};

/// Full reduced row echelon form with combination tracking.
Echelon echelon(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);
/// Basis of {v : v * m = 0}, i.e. row combinations summing to zero.
BitMatrix kernel_basis(const BitMatrix& m);
/// Basis of the vectors in rowspace(u) that vanish outside `coords`.
BitMatrix coordinate_section(const BitMatrix& u, std::span<const std::size_t> coords);
/// dim(rowspace(u) intersected with the coordinate subspace on `coords`).
std::size_t coordinate_section_dim(const BitMatrix& u, std::span<const std::size_t> coords);
/// dim((U + W) / W).
std::size_t quotient_dim(const BitMatrix& u, const BitMatrix& w);
/// Basis of rowspace(u) intersected with rowspace(w).
BitMatrix intersect(const BitMatrix& u, const BitMatrix& w);
bool membership(const BitVector& v, const BitMatrix& u);
/// Solves x * m = v. Returns false if v is outside the row space.
bool solve_left(const BitMatrix& m, const BitVector& v, BitVector& x);
/// Row basis (echelon rows) of a matrix.
BitMatrix row_basis(const BitMatrix& m);
/// Complement of `coords` inside [0, n).
std::vector<std::size_t> complement_indices(std::size_t n, std::span<const std::size_t> coords);

}  // namespace recinfo

#endif  // RECINFO_F2_HPP

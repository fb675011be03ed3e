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

#include "recinfo/f2.hpp"

#include <algorithm>

namespace recinfo {

namespace {

inline void xor_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    for (std::size_t k = 0; k < dst.size(); ++k) {
        dst[k] ^= src[k];
    }
}

void check_same_size(std::size_t a, std::size_t b) {
    if (a != b) {
        throw std::invalid_argument("bit length mismatch");
    }
}

}  // namespace

BitVector BitVector::from_indices(std::size_t n, std::span<const std::size_t> ones) {
    BitVector v(n);
    for (std::size_t i : ones) {
        if (i >= n) {
            throw std::out_of_range("bit index out of range");
        }
        v.flip(i);
    }
    return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    check_same_size(size_, other.size_);
    xor_words(words_, other.words_);
    return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
    check_same_size(size_, other.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] &= other.words_[k];
    }
    return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
    check_same_size(size_, other.size_);
    for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] |= other.words_[k];
    }
    return *this;
}

bool BitVector::operator<(const BitVector& other) const {
    if (size_ != other.size_) {
        return size_ < other.size_;
    }
    return words_ < other.words_;
}

bool BitVector::any() const {
    return std::any_of(words_.begin(), words_.end(), [](word_t w) { return w != 0; });
}

std::size_t BitVector::popcount() const {
    std::size_t n = 0;
    for (word_t w : words_) {
        n += static_cast<std::size_t>(std::popcount(w));
    }
    return n;
}

std::size_t BitVector::first_one() const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
        if (words_[k]) {
            return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
        }
    }
    return size_;
}

bool BitVector::dot(const BitVector& other) const {
    check_same_size(size_, other.size_);
    word_t acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

std::vector<std::size_t> BitVector::ones() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
        word_t w = words_[k];
        while (w) {
            out.push_back(k * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::string BitVector::str() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {}

BitMatrix BitMatrix::identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m.set(i, i);
    }
    return m;
}

BitMatrix BitMatrix::from_rows(std::size_t cols, std::span<const BitVector> rows) {
    BitMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        m.set_row(r, rows[r]);
    }
    return m;
}

BitVector BitMatrix::row(std::size_t r) const {
    BitVector v(cols_);
    auto src = row_words(r);
    std::copy(src.begin(), src.end(), v.words().begin());
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVector& v) {
    check_same_size(v.size(), cols_);
    auto src = v.words();
    std::copy(src.begin(), src.end(), row_words(r).begin());
}

void BitMatrix::append_row(const BitVector& v) {
    check_same_size(v.size(), cols_);
    data_.insert(data_.end(), v.words().begin(), v.words().end());
    ++rows_;
}

void BitMatrix::xor_row(std::size_t dst, std::size_t src) {
    xor_words(row_words(dst), row_words(src));
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) {
        return;
    }
    std::swap_ranges(data_.begin() + a * stride_, data_.begin() + (a + 1) * stride_, data_.begin() + b * stride_);
}

bool BitMatrix::row_is_zero(std::size_t r) const {
    auto w = row_words(r);
    return std::all_of(w.begin(), w.end(), [](word_t x) { return x == 0; });
}

BitMatrix BitMatrix::select_rows(std::span<const std::size_t> idx) const {
    BitMatrix out(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i) {
        auto src = row_words(idx[i]);
        std::copy(src.begin(), src.end(), out.row_words(i).begin());
    }
    return out;
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> idx) const {
    BitMatrix out(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        std::size_t c = idx[j];
        for (std::size_t r = 0; r < rows_; ++r) {
            if (get(r, c)) {
                out.set(r, j);
            }
        }
    }
    return out;
}

BitMatrix BitMatrix::stack(const BitMatrix& a, const BitMatrix& b) {
    check_same_size(a.cols_, b.cols_);
    BitMatrix out(a.rows_ + b.rows_, a.cols_);
    std::copy(a.data_.begin(), a.data_.end(), out.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), out.data_.begin() + a.data_.size());
    return out;
}

BitMatrix BitMatrix::transpose() const {
    BitMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        auto w = row_words(r);
        for (std::size_t k = 0; k < stride_; ++k) {
            word_t x = w[k];
            while (x) {
                out.set(k * 64 + static_cast<std::size_t>(std::countr_zero(x)), r);
                x &= x - 1;
            }
        }
    }
    return out;
}

BitVector BitMatrix::combine_rows(const BitVector& v) const {
    check_same_size(v.size(), rows_);
    BitVector out(cols_);
    for (std::size_t r : v.ones()) {
        xor_words(out.words(), row_words(r));
    }
    return out;
}

void RowSpace::reduce(BitVector& v) const {
    check_same_size(v.size(), cols_);
    // Rows are sorted by pivot and each row is zero left of its pivot, so one
    // ascending pass clears every pivot column.
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (v.get(pivots_[i])) {
            v ^= rows_[i];
        }
    }
}

bool RowSpace::contains(BitVector v) const {
    reduce(v);
    return v.none();
}

bool RowSpace::insert(BitVector v) {
    reduce(v);
    std::size_t p = v.first_one();
    if (p == v.size()) {
        return false;
    }
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
    pivots_.insert(it, p);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(v));
    return true;
}

void RowSpace::insert_all(const BitMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        insert(m.row(r));
    }
}

BitMatrix RowSpace::basis() const { return BitMatrix::from_rows(cols_, rows_); }

namespace {

// Forward elimination in place. Row order after return: pivot rows first
// (ascending pivot column), then zero rows. `combos`, if non-null, tracks the
// input-row combination of every row.
std::vector<std::size_t> forward_eliminate(BitMatrix& a, BitMatrix* combos) {
    std::vector<std::size_t> pivots;
    std::size_t cur = 0;
    const std::size_t rows = a.rows();
    for (std::size_t c = 0; c < a.cols() && cur < rows; ++c) {
        std::size_t p = cur;
        while (p < rows && !a.get(p, c)) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        a.swap_rows(cur, p);
        if (combos) {
            combos->swap_rows(cur, p);
        }
        // Only words from c/64 onward can be nonzero in the pivot row.
        const std::size_t w0 = c / 64;
        auto prow = a.row_words(cur).subspan(w0);
        for (std::size_t r = cur + 1; r < rows; ++r) {
            if (a.get(r, c)) {
                xor_words(a.row_words(r).subspan(w0), prow);
                if (combos) {
                    combos->xor_row(r, cur);
                }
            }
        }
        pivots.push_back(c);
        ++cur;
    }
    return pivots;
}

}  // namespace

Echelon echelon(const BitMatrix& m) {
    Echelon e;
    BitMatrix a = m;
    BitMatrix combos = BitMatrix::identity(m.rows());
    e.pivots = forward_eliminate(a, &combos);
    const std::size_t r = e.pivots.size();
    // Back substitution to reduced form.
    for (std::size_t i = r; i-- > 0;) {
        std::size_t c = e.pivots[i];
        for (std::size_t j = 0; j < i; ++j) {
            if (a.get(j, c)) {
                a.xor_row(j, i);
                combos.xor_row(j, i);
            }
        }
    }
    std::vector<std::size_t> top(r);
    std::vector<std::size_t> bottom(m.rows() - r);
    for (std::size_t i = 0; i < r; ++i) {
        top[i] = i;
    }
    for (std::size_t i = r; i < m.rows(); ++i) {
        bottom[i - r] = i;
    }
    e.reduced = a.select_rows(top);
    e.combos = combos.select_rows(top);
    e.kernel = combos.select_rows(bottom);
    return e;
}

std::size_t rank(const BitMatrix& m) {
    BitMatrix a = m;
    return forward_eliminate(a, nullptr).size();
}

BitMatrix kernel_basis(const BitMatrix& m) {
    BitMatrix a = m;
    BitMatrix combos = BitMatrix::identity(m.rows());
    std::size_t r = forward_eliminate(a, &combos).size();
    std::vector<std::size_t> bottom;
    for (std::size_t i = r; i < m.rows(); ++i) {
        bottom.push_back(i);
    }
    return combos.select_rows(bottom);
}

std::vector<std::size_t> complement_indices(std::size_t n, std::span<const std::size_t> coords) {
    std::vector<bool> in(n, false);
    for (std::size_t c : coords) {
        in.at(c) = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (!in[i]) {
            out.push_back(i);
        }
    }
    return out;
}

BitMatrix row_basis(const BitMatrix& m) {
    BitMatrix a = m;
    std::size_t r = forward_eliminate(a, nullptr).size();
    std::vector<std::size_t> top(r);
    for (std::size_t i = 0; i < r; ++i) {
        top[i] = i;
    }
    return a.select_rows(top);
}

BitMatrix coordinate_section(const BitMatrix& u, std::span<const std::size_t> coords) {
    auto comp = complement_indices(u.cols(), coords);
    BitMatrix k = kernel_basis(u.select_columns(comp));
    BitMatrix vals(k.rows(), u.cols());
    for (std::size_t i = 0; i < k.rows(); ++i) {
        vals.set_row(i, u.combine_rows(k.row(i)));
    }
    return row_basis(vals);
}

std::size_t coordinate_section_dim(const BitMatrix& u, std::span<const std::size_t> coords) {
    auto comp = complement_indices(u.cols(), coords);
    return rank(u) - rank(u.select_columns(comp));
}

std::size_t quotient_dim(const BitMatrix& u, const BitMatrix& w) {
    return rank(BitMatrix::stack(u, w)) - rank(w);
}

BitMatrix intersect(const BitMatrix& u, const BitMatrix& w) {
    BitMatrix k = kernel_basis(BitMatrix::stack(u, w));
    BitMatrix vals(k.rows(), u.cols());
    for (std::size_t i = 0; i < k.rows(); ++i) {
        BitVector sel(u.rows());
        for (std::size_t j = 0; j < u.rows(); ++j) {
            if (k.get(i, j)) {
                sel.set(j);
            }
        }
        vals.set_row(i, u.combine_rows(sel));
    }
    return row_basis(vals);
}

bool membership(const BitVector& v, const BitMatrix& u) {
    check_same_size(v.size(), u.cols());
    RowSpace s(u.cols());
    s.insert_all(u);
    return s.contains(v);
}

bool solve_left(const BitMatrix& m, const BitVector& v, BitVector& x) {
    check_same_size(v.size(), m.cols());
    BitMatrix a = m;
    BitMatrix combos = BitMatrix::identity(m.rows());
    auto pivots = forward_eliminate(a, &combos);
    BitVector rest = v;
    x = BitVector(m.rows());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (rest.get(pivots[i])) {
            auto rw = a.row_words(i);
            auto dst = rest.words();
            for (std::size_t k = 0; k < dst.size(); ++k) {
                dst[k] ^= rw[k];
            }
            auto cw = combos.row_words(i);
            auto xd = x.words();
            for (std::size_t k = 0; k < xd.size(); ++k) {
                xd[k] ^= cw[k];
            }
        }
    }
    return rest.none();
}

}  // namespace recinfo

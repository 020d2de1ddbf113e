// Copyright 2026 The hiddencut Authors
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

#include "hiddencut/gf2.h"

#include <bit>
#include <stdexcept>
#include <utility>

namespace hiddencut {

GF2Vector::GF2Vector(int size) : size_(size), words_((size + 63) / 64, 0) {
    if (size < 0) {
        throw std::invalid_argument("GF2Vector: negative size");
    }
}

GF2Vector GF2Vector::from_word(int size, uint64_t word) {
    if (size > 64 || (size < 64 && (word >> size) != 0)) {
        throw std::invalid_argument("GF2Vector::from_word: word does not fit in size bits");
    }
    GF2Vector v(size);
    if (size > 0) {
        v.words_[0] = word;
    }
    return v;
}

GF2Vector GF2Vector::from_string(const std::string &bits) {
    GF2Vector v(static_cast<int>(bits.size()));
    for (size_t i = 0; i < bits.size(); i++) {
        if (bits[i] == '1') {
            v.set(static_cast<int>(i), true);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("GF2Vector::from_string: expected only 0 and 1");
        }
    }
    return v;
}

void GF2Vector::set(int i, bool value) {
    uint64_t bit = uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= bit;
    } else {
        words_[i >> 6] &= ~bit;
    }
}

GF2Vector &GF2Vector::operator^=(const GF2Vector &other) {
    if (other.size_ != size_) {
        throw std::invalid_argument("GF2Vector: size mismatch");
    }
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

GF2Vector GF2Vector::operator^(const GF2Vector &other) const {
    GF2Vector out = *this;
    out ^= other;
    return out;
}

bool GF2Vector::dot(const GF2Vector &other) const {
    if (other.size_ != size_) {
        throw std::invalid_argument("GF2Vector: size mismatch");
    }
    uint64_t acc = 0;
    for (size_t w = 0; w < words_.size(); w++) {
        acc ^= words_[w] & other.words_[w];
    }
    return std::popcount(acc) & 1;
}

int GF2Vector::weight() const {
    int total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool GF2Vector::is_zero() const {
    for (uint64_t w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

int GF2Vector::lowest_set() const {
    for (size_t w = 0; w < words_.size(); w++) {
        if (words_[w]) {
            return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
        }
    }
    return -1;
}

uint64_t GF2Vector::to_word() const {
    if (size_ > 64) {
        throw std::out_of_range("GF2Vector::to_word: more than 64 bits");
    }
    return words_.empty() ? 0 : words_[0];
}

std::string GF2Vector::to_string() const {
    std::string s(size_, '0');
    for (int i = 0; i < size_; i++) {
        if (get(i)) {
            s[i] = '1';
        }
    }
    return s;
}

std::strong_ordering GF2Vector::operator<=>(const GF2Vector &other) const {
    if (auto c = size_ <=> other.size_; c != 0) {
        return c;
    }
    for (size_t w = words_.size(); w-- > 0;) {
        if (auto c = words_[w] <=> other.words_[w]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

GF2Matrix GF2Matrix::from_words(int num_cols, std::span<const uint64_t> rows) {
    GF2Matrix m{num_cols, {}};
    for (uint64_t r : rows) {
        m.rows.push_back(GF2Vector::from_word(num_cols, r));
    }
    return m;
}

void GF2Matrix::push_row(GF2Vector row) {
    if (row.size() != num_cols) {
        throw std::invalid_argument("GF2Matrix: row length does not match num_cols");
    }
    rows.push_back(std::move(row));
}

RrefResult rref(const GF2Matrix &m) {
    std::vector<GF2Vector> rows = m.rows;
    for (const auto &r : rows) {
        if (r.size() != m.num_cols) {
            throw std::invalid_argument("rref: ragged matrix");
        }
    }
    std::vector<int> pivots;
    size_t rank = 0;
    for (int col = 0; col < m.num_cols && rank < rows.size(); col++) {
        size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].get(col)) {
            pivot++;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && rows[r].get(col)) {
                rows[r] ^= rows[rank];
            }
        }
        pivots.push_back(col);
        rank++;
    }
    rows.resize(rank);
    return RrefResult{GF2Matrix{m.num_cols, std::move(rows)}, static_cast<int>(rank), std::move(pivots)};
}

int rank(const GF2Matrix &m) {
    return rref(m).rank;
}

GF2Subspace::GF2Subspace(int ambient_dim) : ambient_dim_(ambient_dim) {
    if (ambient_dim < 0) {
        throw std::invalid_argument("GF2Subspace: negative dimension");
    }
}

void GF2Subspace::rebuild(std::vector<GF2Vector> vectors) {
    auto reduced = rref(GF2Matrix{ambient_dim_, std::move(vectors)});
    basis_ = std::move(reduced.matrix.rows);
    pivots_ = std::move(reduced.pivots);
}

GF2Subspace GF2Subspace::span(int ambient_dim, std::span<const GF2Vector> vectors) {
    GF2Subspace s(ambient_dim);
    s.rebuild(std::vector<GF2Vector>(vectors.begin(), vectors.end()));
    return s;
}

GF2Subspace GF2Subspace::span_words(int ambient_dim, std::span<const uint64_t> vectors) {
    return span(ambient_dim, GF2Matrix::from_words(ambient_dim, vectors).rows);
}

GF2Subspace GF2Subspace::full(int ambient_dim) {
    std::vector<GF2Vector> unit;
    for (int i = 0; i < ambient_dim; i++) {
        GF2Vector v(ambient_dim);
        v.set(i, true);
        unit.push_back(std::move(v));
    }
    return span(ambient_dim, unit);
}

GF2Vector GF2Subspace::reduce(GF2Vector v) const {
    if (v.size() != ambient_dim_) {
        throw std::invalid_argument("GF2Subspace: vector length does not match ambient dimension");
    }
    for (size_t i = 0; i < basis_.size(); i++) {
        if (v.get(pivots_[i])) {
            v ^= basis_[i];
        }
    }
    return v;
}

bool GF2Subspace::insert(const GF2Vector &v) {
    if (reduce(v).is_zero()) {
        return false;
    }
    auto vectors = basis_;
    vectors.push_back(v);
    rebuild(std::move(vectors));
    return true;
}

GF2Subspace nullspace(const GF2Matrix &m) {
    auto reduced = rref(m);
    int n = m.num_cols;
    std::vector<bool> is_pivot(n, false);
    for (int p : reduced.pivots) {
        is_pivot[p] = true;
    }
    std::vector<GF2Vector> basis;
    for (int free_col = 0; free_col < n; free_col++) {
        if (is_pivot[free_col]) {
            continue;
        }
        GF2Vector x(n);
        x.set(free_col, true);
        for (size_t i = 0; i < reduced.pivots.size(); i++) {
            if (reduced.matrix.rows[i].get(free_col)) {
                x.set(reduced.pivots[i], true);
            }
        }
        basis.push_back(std::move(x));
    }
    return GF2Subspace::span(n, basis);
}

GF2Subspace orthogonal_complement(const GF2Subspace &s) {
    return nullspace(GF2Matrix{s.ambient_dim(), s.basis()});
}

bool membership(const GF2Subspace &s, const GF2Vector &v) {
    return s.reduce(v).is_zero();
}

bool is_subspace_of(const GF2Subspace &sub, const GF2Subspace &parent) {
    if (sub.ambient_dim() != parent.ambient_dim()) {
        return false;
    }
    for (const auto &b : sub.basis()) {
        if (!membership(parent, b)) {
            return false;
        }
    }
    return true;
}

std::vector<GF2Vector> enumerate(const GF2Subspace &s, int cap) {
    if (s.dim() > cap) {
        throw std::invalid_argument("enumerate: subspace dimension exceeds cap");
    }
    size_t count = size_t{1} << s.dim();
    std::vector<GF2Vector> out;
    out.reserve(count);
    for (size_t c = 0; c < count; c++) {
        GF2Vector v(s.ambient_dim());
        for (int i = 0; i < s.dim(); i++) {
            if ((c >> i) & 1) {
                v ^= s.basis()[i];
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

std::vector<uint64_t> enumerate_words(const GF2Subspace &s, int cap) {
    if (s.dim() > cap) {
        throw std::invalid_argument("enumerate: subspace dimension exceeds cap");
    }
    if (s.ambient_dim() > 64) {
        throw std::invalid_argument("enumerate_words: ambient dimension exceeds 64");
    }
    std::vector<uint64_t> basis;
    for (const auto &b : s.basis()) {
        basis.push_back(b.to_word());
    }
    size_t count = size_t{1} << s.dim();
    std::vector<uint64_t> out(count);
    uint64_t cur = 0;
    for (size_t c = 0; c < count; c++) {
        out[c] = cur;
        if (c + 1 < count) {
            cur ^= basis[std::countr_zero(c + 1)];
        }
    }
    return out;
}

std::vector<GF2Vector> coset_representatives(const GF2Subspace &parent, const GF2Subspace &sub) {
    if (!is_subspace_of(sub, parent)) {
        throw std::invalid_argument("coset_representatives: sub is not contained in parent");
    }
    GF2Subspace grown = sub;
    std::vector<GF2Vector> extension;
    for (const auto &b : parent.basis()) {
        if (grown.insert(b)) {
            extension.push_back(b);
        }
    }
    GF2Subspace quotient_span = GF2Subspace::span(parent.ambient_dim(), extension);
    // The extension vectors are independent modulo sub, so their span meets each coset once.
    return enumerate(quotient_span);
}

}  // namespace hiddencut

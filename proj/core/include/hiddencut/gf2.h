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

#ifndef HIDDENCUT_GF2_H
#define HIDDENCUT_GF2_H

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hiddencut {

/// Bit-packed vector in Z2^n, bit i <-> qubit i. Any n >= 0 is supported;
/// words beyond the first exist for n > 64.
class GF2Vector {
   public:
    GF2Vector() = default;
    explicit GF2Vector(int size);
    static GF2Vector from_word(int size, uint64_t word);
    /// Little-endian text (qubit 0 first).
    static GF2Vector from_string(const std::string &bits);

    int size() const {
        return size_;
    }
    bool get(int i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(int i, bool value);
    void flip(int i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    GF2Vector &operator^=(const GF2Vector &other);
    GF2Vector operator^(const GF2Vector &other) const;
    /// Z2 inner product.
    bool dot(const GF2Vector &other) const;
    int weight() const;
    bool is_zero() const;
    /// Lowest set index, or -1 for the zero vector.
    int lowest_set() const;
    /// Low 64 bits; throws if size > 64.
    uint64_t to_word() const;
    std::string to_string() const;

    std::span<const uint64_t> words() const {
        return words_;
    }

    bool operator==(const GF2Vector &other) const = default;
    std::strong_ordering operator<=>(const GF2Vector &other) const;

   private:
    int size_ = 0;
    std::vector<uint64_t> words_;
};

struct GF2Matrix {
    int num_cols = 0;
    std::vector<GF2Vector> rows;

    static GF2Matrix from_words(int num_cols, std::span<const uint64_t> rows);
    void push_row(GF2Vector row);
    size_t num_rows() const {
        return rows.size();
    }
    bool operator==(const GF2Matrix &other) const = default;
};

struct RrefResult {
    GF2Matrix matrix;
    int rank = 0;
    std::vector<int> pivots;
};

/// Reduced row-echelon form, lowest-index pivot first; zero rows dropped.
RrefResult rref(const GF2Matrix &m);
int rank(const GF2Matrix &m);

/// Subspace of Z2^n held as an RREF basis (pivot columns strictly increasing,
/// each pivot column has a single 1).
class GF2Subspace {
   public:
    explicit GF2Subspace(int ambient_dim);
    static GF2Subspace span(int ambient_dim, std::span<const GF2Vector> vectors);
    static GF2Subspace span_words(int ambient_dim, std::span<const uint64_t> vectors);
    static GF2Subspace full(int ambient_dim);

    int ambient_dim() const {
        return ambient_dim_;
    }
    int dim() const {
        return static_cast<int>(basis_.size());
    }
    const std::vector<GF2Vector> &basis() const {
        return basis_;
    }
    const std::vector<int> &pivots() const {
        return pivots_;
    }
    /// Reduces v against the basis; zero iff v is in the subspace.
    GF2Vector reduce(GF2Vector v) const;
    /// Adds v to the spanning set. Returns false when v was already inside.
    bool insert(const GF2Vector &v);

    bool operator==(const GF2Subspace &other) const = default;

   private:
    void rebuild(std::vector<GF2Vector> vectors);

    int ambient_dim_;
    std::vector<GF2Vector> basis_;
    std::vector<int> pivots_;
};

/// {x : m x = 0}.
GF2Subspace nullspace(const GF2Matrix &m);
/// {z : z.b = 0 for every b in s}.
GF2Subspace orthogonal_complement(const GF2Subspace &s);
bool membership(const GF2Subspace &s, const GF2Vector &v);
bool is_subspace_of(const GF2Subspace &sub, const GF2Subspace &parent);

inline constexpr int kDefaultEnumerateCap = 22;

/// All 2^dim elements, in the order of the binary counter over basis coefficients.
std::vector<GF2Vector> enumerate(const GF2Subspace &s, int cap = kDefaultEnumerateCap);
/// Word form of `enumerate` for ambient_dim <= 64 (Gray-code order).
std::vector<uint64_t> enumerate_words(const GF2Subspace &s, int cap = kDefaultEnumerateCap);

/// One representative per coset of `sub` in `parent`, including 0.
std::vector<GF2Vector> coset_representatives(const GF2Subspace &parent, const GF2Subspace &sub);

}  // namespace hiddencut

#endif

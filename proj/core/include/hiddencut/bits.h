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

#ifndef HIDDENCUT_BITS_H
#define HIDDENCUT_BITS_H

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

// Bit conventions used throughout: bit i of an index or mask is qubit i
// (little-endian, qubit 0 is the least significant amplitude-index bit).

namespace hiddencut {

inline int popcount(uint64_t x) {
    return std::popcount(x);
}

/// Parity of popcount(a & b), i.e. the Z2 inner product.
inline int parity_dot(uint64_t a, uint64_t b) {
    return std::popcount(a & b) & 1;
}

inline uint64_t low_mask(int n) {
    return n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
}

/// Compacts the bits of `x` selected by `mask` into the low bits (pext).
inline uint64_t gather_bits(uint64_t x, uint64_t mask) {
    uint64_t out = 0;
    int k = 0;
    while (mask) {
        int i = std::countr_zero(mask);
        out |= ((x >> i) & 1) << k;
        k++;
        mask &= mask - 1;
    }
    return out;
}

/// Inverse of gather_bits: spreads low bits of `x` onto the set bits of `mask` (pdep).
inline uint64_t deposit_bits(uint64_t x, uint64_t mask) {
    uint64_t out = 0;
    int k = 0;
    while (mask) {
        int i = std::countr_zero(mask);
        out |= ((x >> k) & 1) << i;
        k++;
        mask &= mask - 1;
    }
    return out;
}

/// deposit_bits(r, mask) for every r < 2^popcount(mask).
std::vector<uint64_t> deposit_table(uint64_t mask);

/// Renders the low n bits with qubit 0 leftmost ("little-endian" text form).
std::string bits_to_string(uint64_t x, int n);
/// Parses a little-endian bitstring (qubit 0 first).
uint64_t bits_from_string(const std::string &s);

}  // namespace hiddencut

#endif

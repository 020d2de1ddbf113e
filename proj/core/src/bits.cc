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

#include "hiddencut/bits.h"

#include <stdexcept>

namespace hiddencut {

std::vector<uint64_t> deposit_table(uint64_t mask) {
    int k = popcount(mask);
    std::vector<uint64_t> table(uint64_t{1} << k);
    // Incrementing within the mask: next = ((cur | ~mask) + 1) & mask.
    uint64_t cur = 0;
    for (auto &entry : table) {
        entry = cur;
        cur = ((cur | ~mask) + 1) & mask;
    }
    return table;
}

std::string bits_to_string(uint64_t x, int n) {
    std::string s(n, '0');
    for (int i = 0; i < n; i++) {
        if ((x >> i) & 1) {
            s[i] = '1';
        }
    }
    return s;
}

uint64_t bits_from_string(const std::string &s) {
    if (s.empty() || s.size() > 64) {
        throw std::invalid_argument("bitstring length must be in [1, 64]");
    }
    uint64_t x = 0;
    for (size_t i = 0; i < s.size(); i++) {
        if (s[i] == '1') {
            x |= uint64_t{1} << i;
        } else if (s[i] != '0') {
            throw std::invalid_argument("bitstring may only contain 0 and 1");
        }
    }
    return x;
}

}  // namespace hiddencut

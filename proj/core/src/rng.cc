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

#include "hiddencut/rng.h"

namespace hiddencut {

uint64_t mix_seed(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Rng::Rng(uint64_t seed) : seed_(seed), engine_(mix_seed(seed)) {
}

Rng Rng::split(uint64_t stream) const {
    return Rng(mix_seed(seed_ ^ mix_seed(stream + 0x5851F42D4C957F2DULL)));
}

double Rng::uniform() {
    return uniform_(engine_);
}

double Rng::normal() {
    return normal_(engine_);
}

uint64_t Rng::next_u64() {
    return engine_();
}

bool Rng::bernoulli(double p) {
    return uniform() < p;
}

}  // namespace hiddencut

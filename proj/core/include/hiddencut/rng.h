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

#ifndef HIDDENCUT_RNG_H
#define HIDDENCUT_RNG_H

#include <cstdint>
#include <random>

namespace hiddencut {

/// Seeded random source. Every stochastic operation in the library takes one
/// explicitly; `split` derives statistically independent child streams so that
/// trial i of an experiment is reproducible regardless of scheduling.
class Rng {
   public:
    explicit Rng(uint64_t seed);

    uint64_t seed() const {
        return seed_;
    }

    /// Child stream keyed by `stream`. Deterministic in (seed, stream).
    Rng split(uint64_t stream) const;

    double uniform();
    double normal();
    uint64_t next_u64();
    bool bernoulli(double p);

    std::mt19937_64 &engine() {
        return engine_;
    }

   private:
    uint64_t seed_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// SplitMix64 finalizer; used for seed derivation.
uint64_t mix_seed(uint64_t x);

}  // namespace hiddencut

#endif

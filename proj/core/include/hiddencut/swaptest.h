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


#ifndef HIDDENCUT_SWAPTEST_H
#define HIDDENCUT_SWAPTEST_H

#include <cstdint>
#include <optional>

#include "hiddencut/rng.h"
#include "hiddencut/statevec.h"

namespace hiddencut {

/// Certificate assumed by verify_candidate_cut when none is supplied.
inline constexpr double kFallbackEpsilon = 0.5;

struct VerificationOutcome {
    bool accepted = false;
    /// Always even: two copies per SWAP test.
    uint64_t copies_used = 0;
    double acceptance_prob_exact = 1.0;
};

/// 1/2 + purity/2: the chance that a SWAP test across `mask` accepts.
double swap_test_accept_prob(const PureState &state, const CutMask &mask);

/// One SWAP test across `mask` on a fresh pair of copies.
VerificationOutcome simulate_swap_test(const PureState &state, const CutMask &mask, Rng &rng);

/// m independent SWAP tests; accepts iff every one accepts.
VerificationOutcome amplified_product_test(const PureState &state, const CutMask &mask, int m, Rng &rng);

/// Smallest m with exp(-epsilon^2 m / 2) <= 1 - confidence. Zero for confidence 0.
int repetitions_for_confidence(double epsilon, double confidence);

/// Amplified product test with m = repetitions_for_confidence(epsilon, confidence).
/// `epsilon` defaults to kFallbackEpsilon.
VerificationOutcome verify_candidate_cut(
    const PureState &state, const CutMask &mask, double confidence, std::optional<double> epsilon, Rng &rng);

}  // namespace hiddencut

#endif

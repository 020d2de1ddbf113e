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


#include "hiddencut/swaptest.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hiddencut/purity.h"

namespace hiddencut {

double swap_test_accept_prob(const PureState &state, const CutMask &mask) {
    return 0.5 + 0.5 * purity(state, mask);
}

VerificationOutcome simulate_swap_test(const PureState &state, const CutMask &mask, Rng &rng) {
    double p = swap_test_accept_prob(state, mask);
    return VerificationOutcome{rng.bernoulli(p), 2, p};
}

VerificationOutcome amplified_product_test(const PureState &state, const CutMask &mask, int m, Rng &rng) {
    if (m < 0) {
        throw std::invalid_argument("amplified_product_test: negative repetition count");
    }
    double p = swap_test_accept_prob(state, mask);
    bool accepted = true;
    for (int i = 0; i < m; i++) {
        // Every test consumes its pair even after a rejection is already certain.
        if (!rng.bernoulli(p)) {
            accepted = false;
        }
    }
    return VerificationOutcome{accepted, 2 * static_cast<uint64_t>(m), std::pow(p, m)};
}

int repetitions_for_confidence(double epsilon, double confidence) {
    if (!(epsilon > 0 && epsilon <= 1)) {
        throw std::invalid_argument("verification epsilon must lie in (0, 1]");
    }
    if (!(confidence >= 0 && confidence < 1)) {
        throw std::invalid_argument("verification confidence must lie in [0, 1)");
    }
    double target = 1.0 - confidence;
    double e2 = epsilon * epsilon;
    int m = static_cast<int>(std::ceil(2.0 * std::log(1.0 / target) / e2));
    m = std::max(m, 0);
    // Guard the ceil against rounding in either direction.
    while (std::exp(-e2 * m / 2.0) > target) {
        m++;
    }
    while (m > 0 && std::exp(-e2 * (m - 1) / 2.0) <= target) {
        m--;
    }
    return m;
}

VerificationOutcome verify_candidate_cut(
    const PureState &state, const CutMask &mask, double confidence, std::optional<double> epsilon, Rng &rng) {
    int m = repetitions_for_confidence(epsilon.value_or(kFallbackEpsilon), confidence);
    return amplified_product_test(state, mask, m, rng);
}

}  // namespace hiddencut

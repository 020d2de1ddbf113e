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

#include <cmath>

#include "gtest/gtest.h"
#include "hiddencut/purity.h"
#include "oracles.h"

using namespace hiddencut;

namespace {

PureState bell() {
    return PureState::normalized({1, 0, 0, 1});
}

}  // namespace

TEST(swaptest, accept_prob_examples) {
    ASSERT_NEAR(swap_test_accept_prob(PureState::basis(3, 5), CutMask(3, 1)), 1.0, 1e-15);
    ASSERT_NEAR(swap_test_accept_prob(bell(), CutMask(2, 1)), 0.75, 1e-15);
}

TEST(swaptest, matches_doubled_register_projector) {
    Rng rng(1);
    for (int n = 1; n <= 3; n++) {
        for (int rep = 0; rep < 5; rep++) {
            auto psi = haar_random_state(n, rng);
            for (uint64_t x = 0; x < psi.dimension(); x++) {
                double p = swap_test_accept_prob(psi, CutMask(n, x));
                ASSERT_NEAR(p, oracle::doubled_register_swap_accept(psi, x), 1e-12);
                ASSERT_GE(p, 0.5);
                ASSERT_LE(p, 1.0 + 1e-12);
            }
        }
    }
}

TEST(swaptest, simulated_bell_acceptance) {
    Rng rng(2);
    const int draws = 10000;
    int accepted = 0;
    for (int i = 0; i < draws; i++) {
        auto out = simulate_swap_test(bell(), CutMask(2, 1), rng);
        ASSERT_EQ(out.copies_used, 2u);
        accepted += out.accepted;
    }
    ASSERT_LE(std::abs(accepted / double(draws) - 0.75), 4 * std::sqrt(0.75 * 0.25 / draws));
}

TEST(swaptest, product_mask_always_accepts) {
    Rng rng(3);
    auto psi = PureState::basis(2, 1);
    for (int i = 0; i < 100; i++) {
        ASSERT_TRUE(simulate_swap_test(psi, CutMask(2, 1), rng).accepted);
    }
}

TEST(swaptest, seeded_determinism) {
    Rng a(4);
    Rng b(4);
    for (int i = 0; i < 50; i++) {
        ASSERT_EQ(simulate_swap_test(bell(), CutMask(2, 1), a).accepted,
                  simulate_swap_test(bell(), CutMask(2, 1), b).accepted);
    }
}

TEST(swaptest, amplified_exact_probability_and_copies) {
    Rng rng(5);
    auto psi = haar_random_state(4, rng);
    CutMask mask(4, 0b0110);
    double single = swap_test_accept_prob(psi, mask);
    for (int m : {0, 1, 5, 17}) {
        auto out = amplified_product_test(psi, mask, m, rng);
        ASSERT_EQ(out.copies_used, 2u * m);
        ASSERT_NEAR(out.acceptance_prob_exact, std::pow(single, m), 1e-12);
    }
    ASSERT_TRUE(amplified_product_test(psi, mask, 0, rng).accepted);
    ASSERT_THROW(amplified_product_test(psi, mask, -1, rng), std::invalid_argument);
}

TEST(swaptest, amplified_true_cut_always_accepts) {
    Rng rng(6);
    auto inst = plant_instance(SetPartition::from_parts(4, {{0, 3}, {1, 2}}), HaarFactors{}, rng);
    for (int i = 0; i < 50; i++) {
        ASSERT_TRUE(amplified_product_test(inst.state, CutMask(4, 0b1001), 20, rng).accepted);
    }
}

TEST(swaptest, amplified_false_cut_obeys_exponential_bound) {
    // Single-qubit cut of a generalized GHZ pair with purity 1 - eps^2.
    double eps = 0.5;
    double l = schmidt_weight_for_epsilon(eps);
    auto psi = PureState::normalized({std::sqrt(l), 0, 0, std::sqrt(1 - l)});
    CutMask mask(2, 1);
    ASSERT_NEAR(purity(psi, mask), 1 - eps * eps, 1e-12);
    Rng rng(7);
    const int m = 8;
    const int trials = 20000;
    int accepted = 0;
    for (int i = 0; i < trials; i++) {
        accepted += amplified_product_test(psi, mask, m, rng).accepted;
    }
    double bound = std::exp(-eps * eps * m / 2);
    double rate = accepted / double(trials);
    ASSERT_LE(rate, bound + 4 * std::sqrt(bound * (1 - bound) / trials));
}

TEST(swaptest, repetitions_for_confidence) {
    ASSERT_EQ(repetitions_for_confidence(0.5, 0.0), 0);
    int m = repetitions_for_confidence(0.5, 0.99);
    ASSERT_LE(std::exp(-0.25 * m / 2), 0.01);
    ASSERT_GT(std::exp(-0.25 * (m - 1) / 2), 0.01);
    ASSERT_THROW(repetitions_for_confidence(0.5, 1.0), std::invalid_argument);
    ASSERT_THROW(repetitions_for_confidence(0.0, 0.5), std::invalid_argument);
}

TEST(swaptest, verify_true_cut) {
    Rng rng(8);
    auto inst = plant_instance(SetPartition::from_parts(4, {{0, 1}, {2, 3}}), HaarFactors{}, rng);
    for (double confidence : {0.0, 0.5, 0.99}) {
        auto out = verify_candidate_cut(inst.state, CutMask(4, 0b0011), confidence, inst.epsilon_certified, rng);
        ASSERT_TRUE(out.accepted);
        ASSERT_EQ(out.copies_used, 2u * repetitions_for_confidence(*inst.epsilon_certified, confidence));
    }
    auto fallback = verify_candidate_cut(inst.state, CutMask(4, 0b0011), 0.99, std::nullopt, rng);
    ASSERT_EQ(fallback.copies_used, 2u * repetitions_for_confidence(kFallbackEpsilon, 0.99));
    ASSERT_EQ(verify_candidate_cut(inst.state, CutMask(4, 0b0101), 0.0, std::nullopt, rng).copies_used, 0u);
}

TEST(swaptest, verify_rejects_haar_false_cut) {
    Rng rng(9);
    std::vector<int> sizes = {5, 5};
    int rejected = 0;
    for (int trial = 0; trial < 100; trial++) {
        auto inst = plant_instance(SetPartition::blocks(sizes), HaarFactors{}, rng);
        // Crosses the planted cut: two qubits from each side.
        auto out = verify_candidate_cut(inst.state, CutMask(10, 0b0001100011), 0.99, inst.epsilon_certified, rng);
        rejected += !out.accepted;
    }
    ASSERT_GE(rejected, 99);
}

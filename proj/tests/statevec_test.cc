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


#include "hiddencut/statevec.h"

#include <cmath>

#include "gtest/gtest.h"
#include "hiddencut/bits.h"
#include "hiddencut/haarstats.h"
#include "hiddencut/purity.h"

using namespace hiddencut;

namespace {

PureState bell() {
    return PureState::normalized({1, 0, 0, 1});
}

void expect_states_near(const PureState &a, const PureState &b, double tol) {
    ASSERT_EQ(a.num_qubits(), b.num_qubits());
    for (uint64_t i = 0; i < a.dimension(); i++) {
        ASSERT_NEAR(std::abs(a[i] - b[i]), 0.0, tol) << "index " << i;
    }
}

}  // namespace

TEST(statevec, haar_single_qubit_is_normalized) {
    Rng rng(1);
    auto psi = haar_random_state(1, rng);
    ASSERT_NEAR(std::norm(psi[0]) + std::norm(psi[1]), 1.0, 1e-12);
}

TEST(statevec, haar_is_deterministic_under_seed) {
    Rng a(99);
    Rng b(99);
    ASSERT_EQ(haar_random_state(5, a), haar_random_state(5, b));
    Rng c(100);
    ASSERT_FALSE(haar_random_state(5, c) == haar_random_state(5, b));
}

TEST(statevec, haar_rejects_out_of_range) {
    Rng rng(0);
    ASSERT_THROW(haar_random_state(0, rng), std::invalid_argument);
    ASSERT_THROW(haar_random_state(15, rng), std::invalid_argument);
    ASSERT_NO_THROW(haar_random_state(15, rng, 15));
}

TEST(statevec, haar_mean_purity_matches_closed_form) {
    // Mask over qubits {0,1,2} of 6: expected 16/65.
    Rng rng(7);
    const int samples = 2000;
    const uint64_t mask = 0b000111;
    double acc = 0;
    for (int i = 0; i < samples; i++) {
        acc += purity(haar_random_state(6, rng), mask);
    }
    double expected = 16.0 / 65.0;
    ASSERT_NEAR(mean_purity(6, 3), expected, 1e-15);
    double sigma = std::sqrt(purity_covariance(6, mask, mask) / samples);
    ASSERT_LE(std::abs(acc / samples - expected), 4 * sigma);
}

TEST(statevec, product_of_basis_qubits) {
    std::vector<std::pair<PureState, std::vector<int>>> factors = {
        {PureState::basis(1, 0), {0}},
        {PureState::basis(1, 1), {1}},
    };
    ASSERT_EQ(product_state(factors), PureState::basis(2, bits_from_string("01")));
}

TEST(statevec, interleaved_bell_pairs) {
    std::vector<std::pair<PureState, std::vector<int>>> factors = {{bell(), {0, 2}}, {bell(), {1, 3}}};
    auto psi = product_state(factors);
    for (uint64_t x = 1; x < 15; x++) {
        double p = purity(psi, x);
        if (x == bits_from_string("0101") || x == bits_from_string("1010")) {
            ASSERT_NEAR(p, 1.0, 1e-12) << bits_to_string(x, 4);
        } else {
            ASSERT_LT(p, 1.0 - 1e-3) << bits_to_string(x, 4);
        }
    }
}

TEST(statevec, permuting_scattered_factors_matches_contiguous_product) {
    Rng rng(3);
    auto f1 = haar_random_state(2, rng);
    auto f2 = haar_random_state(3, rng);
    std::vector<std::pair<PureState, std::vector<int>>> scattered = {{f1, {4, 1}}, {f2, {0, 3, 2}}};
    std::vector<std::pair<PureState, std::vector<int>>> contiguous = {{f1, {0, 1}}, {f2, {2, 3, 4}}};
    // Route each scattered qubit to its contiguous slot: 4->0, 1->1, 0->2, 3->3, 2->4.
    std::vector<int> perm = {2, 1, 4, 3, 0};
    expect_states_near(apply_qubit_permutation(product_state(scattered), perm), product_state(contiguous), 1e-15);
}

TEST(statevec, product_state_rejects_bad_layouts) {
    auto q = PureState::basis(1, 0);
    auto pair = PureState::basis(2, 0);
    std::vector<std::pair<PureState, std::vector<int>>> overlap = {{q, {0}}, {q, {0}}};
    std::vector<std::pair<PureState, std::vector<int>>> gap = {{q, {0}}, {q, {2}}};
    std::vector<std::pair<PureState, std::vector<int>>> size = {{pair, {0}}, {q, {1}}};
    ASSERT_THROW(product_state(overlap), std::invalid_argument);
    ASSERT_THROW(product_state(gap), std::invalid_argument);
    ASSERT_THROW(product_state(size), std::invalid_argument);
}

TEST(statevec, permutation_basics) {
    Rng rng(5);
    auto psi = haar_random_state(4, rng);
    std::vector<int> id = {0, 1, 2, 3};
    ASSERT_EQ(apply_qubit_permutation(psi, id), psi);

    std::vector<int> perm = {2, 0, 3, 1};
    auto inv = invert_permutation(perm);
    ASSERT_EQ(apply_qubit_permutation(apply_qubit_permutation(psi, perm), inv), psi);

    std::vector<int> swap01 = {1, 0};
    auto ket01 = PureState::basis(2, bits_from_string("01"));
    ASSERT_EQ(apply_qubit_permutation(ket01, swap01), PureState::basis(2, bits_from_string("10")));

    std::vector<int> bad = {0, 0, 1, 2};
    ASSERT_THROW(apply_qubit_permutation(psi, bad), std::invalid_argument);
}

TEST(statevec, permutation_is_a_group_action) {
    Rng rng(6);
    auto psi = haar_random_state(5, rng);
    std::vector<int> first = {3, 0, 4, 1, 2};
    std::vector<int> second = {1, 4, 0, 2, 3};
    auto twice = apply_qubit_permutation(apply_qubit_permutation(psi, first), second);
    ASSERT_EQ(twice, apply_qubit_permutation(psi, compose_permutations(second, first)));
}

TEST(statevec, norm_is_preserved) {
    Rng rng(8);
    for (int n = 1; n <= 8; n++) {
        auto psi = haar_random_state(n, rng);
        ASSERT_NEAR(psi.norm_squared(), 1.0, 1e-10);
        ASSERT_NEAR(uniform_schmidt_state(n, 0.3, rng).norm_squared(), 1.0, 1e-10);
    }
    ASSERT_THROW(PureState::from_amplitudes({1, 1}), std::invalid_argument);
    ASSERT_THROW(PureState::from_amplitudes({1, 0, 0}), std::invalid_argument);
}

TEST(statevec, cut_mask) {
    CutMask m(4, 0b0011);
    ASSERT_EQ(m.weight(), 2);
    ASSERT_EQ(m.complement().bits(), 0b1100u);
    ASSERT_TRUE(m.nontrivial());
    ASSERT_FALSE(CutMask(4, 0).nontrivial());
    ASSERT_FALSE(CutMask(4, 15).nontrivial());
    ASSERT_EQ(m.to_string(), "1100");
    ASSERT_THROW(CutMask(3, 8), std::invalid_argument);
    std::vector<int> qubits = {1, 3};
    ASSERT_EQ(CutMask::from_qubits(4, qubits).bits(), 0b1010u);
}

TEST(statevec, set_partition_validation_and_order) {
    auto p = SetPartition::from_parts(5, {{4, 2}, {1, 0, 3}});
    ASSERT_EQ(p.parts(), (std::vector<std::vector<int>>{{0, 1, 3}, {2, 4}}));
    ASSERT_EQ(p.part_of(4), 1u);
    ASSERT_EQ(p.max_part_size(), 3);
    ASSERT_EQ(p.min_part_size(), 2);
    ASSERT_TRUE(p.in_cut_subspace(0b00011));
    ASSERT_FALSE(p.in_cut_subspace(0b00001));
    ASSERT_THROW(SetPartition::from_parts(3, {{0, 1}, {1, 2}}), std::invalid_argument);
    ASSERT_THROW(SetPartition::from_parts(3, {{0, 1}}), std::invalid_argument);
    ASSERT_THROW(SetPartition::from_parts(3, {{0, 1, 2}, {}}), std::invalid_argument);
    ASSERT_THROW(SetPartition::from_parts(3, {{0, 1, 3}}), std::invalid_argument);
    std::vector<int> sizes = {2, 3};
    ASSERT_EQ(SetPartition::blocks(sizes), SetPartition::from_parts(5, {{0, 1}, {2, 3, 4}}));
}

TEST(statevec, plant_bell_pairs_certificate) {
    Rng rng(11);
    auto partition = SetPartition::from_parts(4, {{0, 1}, {2, 3}});
    auto inst = plant_instance(partition, ExplicitFactors{{bell(), bell()}}, rng);
    ASSERT_NEAR(*inst.epsilon_certified, std::sqrt(0.5), 1e-12);
    ASSERT_EQ(inst.truth, partition);
    ASSERT_EQ(inst.factor_spec, "explicit");
}

TEST(statevec, plant_refuses_single_qubit_parts) {
    Rng rng(12);
    ASSERT_THROW(plant_instance(SetPartition::singletons(2), HaarFactors{}, rng), std::invalid_argument);
    auto inst = plant_instance(SetPartition::singletons(2), HaarFactors{}, rng, PlantOptions{1e-6, true});
    ASSERT_FALSE(inst.epsilon_certified.has_value());
}

TEST(statevec, plant_haar_halves_is_product) {
    Rng rng(13);
    std::vector<int> sizes = {4, 4};
    auto inst = plant_instance(SetPartition::blocks(sizes), HaarFactors{}, rng);
    ASSERT_NEAR(purity(inst.state, bits_from_string("00001111")), 1.0, 1e-10);
    ASSERT_EQ(inst.factor_spec, "haar");
}

TEST(statevec, plant_refuses_degenerate_certificate) {
    Rng rng(14);
    auto product_pair = PureState::basis(2, 0);
    auto partition = SetPartition::from_parts(4, {{0, 1}, {2, 3}});
    ASSERT_THROW(plant_instance(partition, ExplicitFactors{{product_pair, bell()}}, rng), std::invalid_argument);
}

TEST(statevec, schmidt_spectrum_controls_epsilon) {
    Rng rng(15);
    for (double eps : {0.1, 0.3, 0.5, 0.7}) {
        double w = schmidt_weight_for_epsilon(eps);
        std::vector<int> sizes = {3, 2, 4};
        auto inst = plant_instance(SetPartition::blocks(sizes), SchmidtSpectrumFactors{{w}}, rng);
        ASSERT_NEAR(*inst.epsilon_certified, eps, 1e-9);
    }
    ASSERT_THROW(schmidt_weight_for_epsilon(0.9), std::invalid_argument);
}

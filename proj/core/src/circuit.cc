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

#include "hiddencut/circuit.h"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hiddencut/bits.h"

namespace hiddencut {

namespace {

void apply_hadamard(std::vector<Complex> &amps, int qubit) {
    const double s = 1.0 / std::sqrt(2.0);
    uint64_t bit = uint64_t{1} << qubit;
    for (uint64_t i = 0; i < amps.size(); i++) {
        if (i & bit) {
            continue;
        }
        Complex a = amps[i];
        Complex b = amps[i | bit];
        amps[i] = (a + b) * s;
        amps[i | bit] = (a - b) * s;
    }
}

void apply_controlled_swap(std::vector<Complex> &amps, int control, int q1, int q2) {
    uint64_t c = uint64_t{1} << control;
    uint64_t b1 = uint64_t{1} << q1;
    uint64_t b2 = uint64_t{1} << q2;
    for (uint64_t i = 0; i < amps.size(); i++) {
        // Visit each swapped pair once, from the side with q1 set and q2 clear.
        if ((i & c) && (i & b1) && !(i & b2)) {
            std::swap(amps[i], amps[i ^ b1 ^ b2]);
        }
    }
}

}  // namespace

CircuitResult simulate_fourier_sampling_circuit_detailed(
    std::span<const PureState> copies, const CircuitLimits &limits) {
    int t = static_cast<int>(copies.size());
    if (t < 2 || t % 2 != 0) {
        throw std::invalid_argument("circuit: copies t must be an even integer >= 2");
    }
    int n = copies[0].num_qubits();
    for (const auto &c : copies) {
        if (c.num_qubits() != n) {
            throw std::invalid_argument("circuit: copies have different qubit counts");
        }
    }
    int total = n * (1 + t);
    if (total > limits.max_total_qubits || total > 62) {
        std::ostringstream msg;
        msg << "circuit: n(1+t) = " << total << " exceeds max_total_qubits = " << limits.max_total_qubits;
        throw std::invalid_argument(msg.str());
    }

    // |0^n> on the ancillas tensored with the copies.
    std::vector<Complex> amps(uint64_t{1} << total);
    uint64_t data_dim = uint64_t{1} << (n * t);
    uint64_t copy_mask = low_mask(n);
    for (uint64_t d = 0; d < data_dim; d++) {
        Complex a = 1.0;
        for (int c = 0; c < t; c++) {
            a *= copies[c][(d >> (c * n)) & copy_mask];
        }
        amps[d << n] = a;
    }

    for (int k = 0; k < n; k++) {
        apply_hadamard(amps, k);
    }
    for (int k = 0; k < n; k++) {
        for (int j = 0; j < t; j += 2) {
            apply_controlled_swap(amps, k, n + j * n + k, n + (j + 1) * n + k);
        }
    }
    for (int k = 0; k < n; k++) {
        apply_hadamard(amps, k);
    }

    CircuitResult result{FourierDistribution{n, std::vector<double>(uint64_t{1} << n, 0.0), t, 0.0}, 0.0};
    for (uint64_t i = 0; i < amps.size(); i++) {
        double p = std::norm(amps[i]);
        result.distribution.probs[i & copy_mask] += p;
        result.total_probability += p;
    }
    return result;
}

FourierDistribution simulate_fourier_sampling_circuit(const PureState &state, int t, const CircuitLimits &limits) {
    if (t < 2 || t % 2 != 0) {
        throw std::invalid_argument("circuit: copies t must be an even integer >= 2");
    }
    if (state.num_qubits() * (1 + t) > limits.max_total_qubits) {
        std::ostringstream msg;
        msg << "circuit: n(1+t) = " << state.num_qubits() * (1 + t) << " exceeds max_total_qubits = "
            << limits.max_total_qubits;
        throw std::invalid_argument(msg.str());
    }
    std::vector<PureState> copies(t, state);
    return simulate_fourier_sampling_circuit_detailed(copies, limits).distribution;
}

}  // namespace hiddencut

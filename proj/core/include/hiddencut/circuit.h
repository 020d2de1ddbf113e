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

#ifndef HIDDENCUT_CIRCUIT_H
#define HIDDENCUT_CIRCUIT_H

#include <span>

#include "hiddencut/statevec.h"
#include "hiddencut/wht.h"

namespace hiddencut {

struct CircuitLimits {
    int max_total_qubits = 24;
};

struct CircuitResult {
    FourierDistribution distribution;
    /// Squared norm of the full register just before measurement.
    double total_probability = 0;
};

/// Full-register simulation of Fourier sampling on t copies.
///
/// Register layout: ancilla qubit k is index bit k; qubit j of copy c is index
/// bit n + c*n + j. The circuit is H on every ancilla, then for each ancilla k
/// the controlled pair-swaps of qubit k between copies (0,1), (2,3), ..., then
/// H on every ancilla again. The result is the exact ancilla marginal.
FourierDistribution simulate_fourier_sampling_circuit(
    const PureState &state, int t, const CircuitLimits &limits = {});

/// Same circuit on an explicit list of copies (which need not be equal).
CircuitResult simulate_fourier_sampling_circuit_detailed(
    std::span<const PureState> copies, const CircuitLimits &limits = {});

}  // namespace hiddencut

#endif

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

#ifndef HIDDENCUT_PURITY_H
#define HIDDENCUT_PURITY_H

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hiddencut/statevec.h"

namespace hiddencut {

inline constexpr double kPureTolerance = 1e-8;

/// values[x] = Tr[psi_x^2] for every mask x in Z2^n.
struct EntanglementFeature {
    int num_qubits = 0;
    std::vector<double> values;
};

/// Raised when the pure-mask collection of brute_force_cut_search is not the
/// span of any partition's part indicators.
class InconsistentMaskSet : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Tr[psi_S^2] for S = qubits selected by `mask`, computed as the squared
/// Frobenius norm of the Gram matrix on the smaller side of the bipartition.
double purity(const PureState &state, const CutMask &mask);
/// Same as `purity` for a raw mask (bits beyond n rejected).
double purity(const PureState &state, uint64_t mask);

EntanglementFeature entanglement_feature(const PureState &state, int max_qubits = kDefaultMaxQubits);

/// sqrt(1 - p*) with p* the largest purity across any nontrivial internal
/// bipartition of any part. Requires every part to have at least two qubits,
/// and the state to be product across the partition.
double epsilon_certificate(const PureState &state, const SetPartition &partition);

/// Finest partition whose part unions are exactly the masks of purity >= 1 - tol.
SetPartition brute_force_cut_search(const PureState &state, double tol = kPureTolerance);
/// The same search run on a precomputed feature.
SetPartition cut_search_from_feature(const EntanglementFeature &feature, double tol = kPureTolerance);

}  // namespace hiddencut

#endif

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

#ifndef HIDDENCUT_STATEVEC_H
#define HIDDENCUT_STATEVEC_H

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hiddencut/rng.h"

namespace hiddencut {

using Complex = std::complex<double>;

inline constexpr int kDefaultMaxQubits = 14;
inline constexpr double kNormTolerance = 1e-10;

/// Normalized n-qubit statevector. Immutable after construction.
class PureState {
   public:
    /// Validates length 2^n (n >= 1) and unit norm within `tol`.
    static PureState from_amplitudes(std::vector<Complex> amplitudes, double tol = kNormTolerance);
    /// Normalizes a nonzero vector of length 2^n.
    static PureState normalized(std::vector<Complex> amplitudes);
    static PureState basis(int num_qubits, uint64_t index);

    int num_qubits() const {
        return num_qubits_;
    }
    uint64_t dimension() const {
        return uint64_t{1} << num_qubits_;
    }
    std::span<const Complex> amplitudes() const {
        return amplitudes_;
    }
    const Complex &operator[](uint64_t index) const {
        return amplitudes_[index];
    }
    double norm_squared() const;

    bool operator==(const PureState &other) const = default;

   private:
    PureState(int num_qubits, std::vector<Complex> amplitudes);

    int num_qubits_;
    std::vector<Complex> amplitudes_;
};

/// n-bit string x in Z2^n; bit i selects qubit i.
class CutMask {
   public:
    CutMask(int num_qubits, uint64_t bits);
    static CutMask from_qubits(int num_qubits, std::span<const int> qubits);

    int num_qubits() const {
        return num_qubits_;
    }
    uint64_t bits() const {
        return bits_;
    }
    int weight() const;
    CutMask complement() const;
    /// False for the empty mask and the all-ones mask.
    bool nontrivial() const;
    std::string to_string() const;

    bool operator==(const CutMask &other) const = default;

   private:
    int num_qubits_;
    uint64_t bits_;
};

/// Disjoint nonempty parts covering {0, ..., n-1}, sorted by smallest member.
class SetPartition {
   public:
    static SetPartition from_parts(int num_qubits, std::vector<std::vector<int>> parts);
    static SetPartition single_part(int num_qubits);
    static SetPartition singletons(int num_qubits);
    /// Contiguous blocks of the given sizes: {0..s0-1}, {s0..s0+s1-1}, ...
    static SetPartition blocks(std::span<const int> sizes);

    int num_qubits() const {
        return num_qubits_;
    }
    size_t num_parts() const {
        return parts_.size();
    }
    const std::vector<std::vector<int>> &parts() const {
        return parts_;
    }
    const std::vector<int> &part(size_t k) const {
        return parts_[k];
    }
    uint64_t part_mask(size_t k) const;
    int max_part_size() const;
    int min_part_size() const;
    /// Index of the part containing `qubit`.
    size_t part_of(int qubit) const;
    /// True iff y has even overlap with every part (y lies in the cut subspace).
    bool in_cut_subspace(uint64_t y) const;
    std::string to_string() const;

    bool operator==(const SetPartition &other) const = default;

   private:
    SetPartition(int num_qubits, std::vector<std::vector<int>> parts);

    int num_qubits_;
    std::vector<std::vector<int>> parts_;
};

/// Haar-random state via i.i.d. complex Gaussian amplitudes.
PureState haar_random_state(int num_qubits, Rng &rng, int max_qubits = kDefaultMaxQubits);

/// Tensor assembly: factor k lives on qubit list `qubits` (its qubit j is
/// global qubit qubits[j]). The lists must partition {0, ..., n-1}.
PureState product_state(std::span<const std::pair<PureState, std::vector<int>>> factors);

/// Qubit i of the input becomes qubit perm[i] of the output.
PureState apply_qubit_permutation(const PureState &state, std::span<const int> perm);

/// Composite permutation equivalent to applying `first` then `second`.
std::vector<int> compose_permutations(std::span<const int> second, std::span<const int> first);
std::vector<int> invert_permutation(std::span<const int> perm);

/// sqrt(l)|0...0> + sqrt(1-l)|1...1> followed by independent Haar single-qubit
/// rotations. Every internal bipartition has Schmidt coefficients {l, 1-l}.
PureState uniform_schmidt_state(int num_qubits, double weight, Rng &rng);
/// Schmidt weight l in [0, 1/2] whose certificate sqrt(2 l (1-l)) equals `epsilon`.
double schmidt_weight_for_epsilon(double epsilon);

struct HaarFactors {};
/// One Schmidt weight per part (a single entry is broadcast to every part).
struct SchmidtSpectrumFactors {
    std::vector<double> weights;
};
/// Explicit factor states, one per part in canonical part order.
struct ExplicitFactors {
    std::vector<PureState> factors;
};
using FactorSpec = std::variant<HaarFactors, SchmidtSpectrumFactors, ExplicitFactors>;

std::string describe(const FactorSpec &spec);

struct PlantOptions {
    /// Instances certified below this are refused as degenerate.
    double epsilon_floor = 1e-6;
    /// Allows single-qubit parts; the certificate is then left empty.
    bool allow_singletons = false;
};

struct PlantedInstance {
    PureState state;
    SetPartition truth;
    /// sqrt(1 - p*) certificate; empty when some part has no internal cut.
    std::optional<double> epsilon_certified;
    std::string factor_spec;
};

PlantedInstance plant_instance(
    const SetPartition &partition, const FactorSpec &spec, Rng &rng, const PlantOptions &options = {});

}  // namespace hiddencut

#endif

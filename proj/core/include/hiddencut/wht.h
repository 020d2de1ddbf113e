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

#ifndef HIDDENCUT_WHT_H
#define HIDDENCUT_WHT_H

#include <cstdint>
#include <span>
#include <vector>

#include "hiddencut/gf2.h"
#include "hiddencut/purity.h"
#include "hiddencut/rng.h"

namespace hiddencut {

/// Total negative mass tolerated before clamping; beyond it the distribution
/// is rejected as a numerical-integrity failure.
inline constexpr double kNegativeMassTolerance = 1e-9;

/// Outcome law over Z2^n of Fourier sampling with `copies_t` state copies.
struct FourierDistribution {
    int num_qubits = 0;
    std::vector<double> probs;
    int copies_t = 0;
    /// Sum of the negative entries removed by clamping.
    double negative_mass = 0;
};

/// Unnormalized in-place butterfly: out[y] = sum_x (-1)^{x.y} in[x].
void walsh_hadamard_inplace(std::span<double> values);
std::vector<double> walsh_hadamard(std::vector<double> values);

/// probs[y] = 2^-n sum_x (-1)^{x.y} purity[x]^{t/2}. Requires even t >= 2.
FourierDistribution statehsp_distribution(const EntanglementFeature &feature, int t);

/// Round law of the adaptive algorithm: the Walsh sum restricted to z in `sigma`,
/// probs[y] = 2^-n sum_{z in sigma} (-1)^{y.z} purity[z]^{t/2}.
FourierDistribution adaptive_distribution(const EntanglementFeature &feature, int t, const GF2Subspace &sigma);

/// Builds the distribution from the 2^n amplified Walsh input (zero outside
/// the summation set), applying the clamp/renormalize policy.
FourierDistribution distribution_from_walsh_input(int num_qubits, int t, std::vector<double> walsh_input);

/// Inverse-CDF sampler over a fixed distribution.
class DistributionSampler {
   public:
    explicit DistributionSampler(const FourierDistribution &dist);
    uint64_t draw(Rng &rng) const;

   private:
    std::vector<double> cumulative_;
};

std::vector<uint64_t> sample(const FourierDistribution &dist, Rng &rng, size_t count);

/// Probability mass per Hamming weight 0..n.
std::vector<double> weight_histogram(const FourierDistribution &dist);

double total_variation(std::span<const double> p, std::span<const double> q);

}  // namespace hiddencut

#endif

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

#include "hiddencut/wht.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hiddencut/bits.h"

namespace hiddencut {

namespace {

void check_even_t(int t) {
    if (t < 2 || t % 2 != 0) {
        throw std::invalid_argument("copies t must be an even integer >= 2");
    }
}

void check_feature(const EntanglementFeature &feature) {
    if (feature.num_qubits < 1 || feature.values.size() != (uint64_t{1} << feature.num_qubits)) {
        throw std::invalid_argument("feature length does not match n");
    }
}

}  // namespace

void walsh_hadamard_inplace(std::span<double> values) {
    size_t len = values.size();
    if (len == 0 || (len & (len - 1)) != 0) {
        throw std::invalid_argument("walsh_hadamard: length must be a power of two");
    }
    for (size_t half = 1; half < len; half <<= 1) {
        for (size_t block = 0; block < len; block += 2 * half) {
            for (size_t i = block; i < block + half; i++) {
                double a = values[i];
                double b = values[i + half];
                values[i] = a + b;
                values[i + half] = a - b;
            }
        }
    }
}

std::vector<double> walsh_hadamard(std::vector<double> values) {
    walsh_hadamard_inplace(values);
    return values;
}

FourierDistribution distribution_from_walsh_input(int num_qubits, int t, std::vector<double> walsh_input) {
    walsh_hadamard_inplace(walsh_input);
    double scale = std::ldexp(1.0, -num_qubits);
    double total = 0;
    double negative = 0;
    for (double &p : walsh_input) {
        p *= scale;
        total += p;
        if (p < 0) {
            negative -= p;
            p = 0;
        }
    }
    if (negative > kNegativeMassTolerance || std::abs(total - 1.0) > kNegativeMassTolerance) {
        std::ostringstream msg;
        msg << "Fourier distribution failed integrity check: negative mass " << negative << ", total "
            << total;
        throw std::runtime_error(msg.str());
    }
    double kept = total + negative;
    for (double &p : walsh_input) {
        p /= kept;
    }
    return FourierDistribution{num_qubits, std::move(walsh_input), t, negative};
}

FourierDistribution statehsp_distribution(const EntanglementFeature &feature, int t) {
    check_even_t(t);
    check_feature(feature);
    std::vector<double> amplified(feature.values.size());
    for (size_t x = 0; x < amplified.size(); x++) {
        amplified[x] = std::pow(feature.values[x], t / 2);
    }
    return distribution_from_walsh_input(feature.num_qubits, t, std::move(amplified));
}

FourierDistribution adaptive_distribution(const EntanglementFeature &feature, int t, const GF2Subspace &sigma) {
    check_even_t(t);
    check_feature(feature);
    if (sigma.ambient_dim() != feature.num_qubits) {
        throw std::invalid_argument("adaptive_distribution: subspace dimension does not match n");
    }
    std::vector<double> amplified(feature.values.size(), 0.0);
    for (uint64_t z : enumerate_words(sigma, feature.num_qubits)) {
        amplified[z] = std::pow(feature.values[z], t / 2);
    }
    return distribution_from_walsh_input(feature.num_qubits, t, std::move(amplified));
}

DistributionSampler::DistributionSampler(const FourierDistribution &dist) : cumulative_(dist.probs.size()) {
    double acc = 0;
    for (size_t i = 0; i < dist.probs.size(); i++) {
        if (!(dist.probs[i] >= 0)) {
            throw std::invalid_argument("sample: distribution has a negative or NaN entry");
        }
        acc += dist.probs[i];
        cumulative_[i] = acc;
    }
    if (!(acc > 0)) {
        throw std::invalid_argument("sample: distribution has no mass");
    }
}

uint64_t DistributionSampler::draw(Rng &rng) const {
    double u = rng.uniform() * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) {
        // u rounded onto the total: take the last outcome with mass.
        it = std::lower_bound(cumulative_.begin(), cumulative_.end(), cumulative_.back());
    }
    return static_cast<uint64_t>(it - cumulative_.begin());
}

std::vector<uint64_t> sample(const FourierDistribution &dist, Rng &rng, size_t count) {
    DistributionSampler sampler(dist);
    std::vector<uint64_t> out(count);
    for (auto &y : out) {
        y = sampler.draw(rng);
    }
    return out;
}

std::vector<double> weight_histogram(const FourierDistribution &dist) {
    std::vector<double> hist(dist.num_qubits + 1, 0.0);
    for (uint64_t y = 0; y < dist.probs.size(); y++) {
        hist[popcount(y)] += dist.probs[y];
    }
    return hist;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
    if (p.size() != q.size()) {
        throw std::invalid_argument("total_variation: length mismatch");
    }
    double acc = 0;
    for (size_t i = 0; i < p.size(); i++) {
        acc += std::abs(p[i] - q[i]);
    }
    return 0.5 * acc;
}

}  // namespace hiddencut

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

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "hiddencut/bits.h"
#include "hiddencut/purity.h"

namespace hiddencut {

namespace {

int log2_exact(size_t length) {
    if (length < 2 || (length & (length - 1)) != 0) {
        throw std::invalid_argument("amplitude vector length must be a power of two >= 2");
    }
    return std::countr_zero(length);
}

}  // namespace

PureState::PureState(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
}

PureState PureState::from_amplitudes(std::vector<Complex> amplitudes, double tol) {
    int n = log2_exact(amplitudes.size());
    if (n > 30) {
        throw std::invalid_argument("too many qubits");
    }
    PureState result(n, std::move(amplitudes));
    double norm = result.norm_squared();
    if (std::abs(norm - 1.0) > tol) {
        std::ostringstream msg;
        msg << "state is not normalized: |psi|^2 = " << norm;
        throw std::invalid_argument(msg.str());
    }
    return result;
}

PureState PureState::normalized(std::vector<Complex> amplitudes) {
    int n = log2_exact(amplitudes.size());
    double norm = 0;
    for (const auto &a : amplitudes) {
        norm += std::norm(a);
    }
    if (!(norm > 0) || !std::isfinite(norm)) {
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    }
    double scale = 1.0 / std::sqrt(norm);
    for (auto &a : amplitudes) {
        a *= scale;
    }
    return PureState(n, std::move(amplitudes));
}

PureState PureState::basis(int num_qubits, uint64_t index) {
    if (num_qubits < 1 || num_qubits > 30) {
        throw std::invalid_argument("num_qubits out of range");
    }
    std::vector<Complex> amps(uint64_t{1} << num_qubits);
    if (index >= amps.size()) {
        throw std::invalid_argument("basis index out of range");
    }
    amps[index] = 1.0;
    return PureState(num_qubits, std::move(amps));
}

double PureState::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

CutMask::CutMask(int num_qubits, uint64_t bits) : num_qubits_(num_qubits), bits_(bits) {
    if (num_qubits < 1 || num_qubits > 63) {
        throw std::invalid_argument("CutMask: num_qubits out of range");
    }
    if (bits >> num_qubits) {
        throw std::invalid_argument("CutMask: bits exceed 2^n");
    }
}

CutMask CutMask::from_qubits(int num_qubits, std::span<const int> qubits) {
    uint64_t bits = 0;
    for (int q : qubits) {
        if (q < 0 || q >= num_qubits) {
            throw std::invalid_argument("CutMask: qubit index out of range");
        }
        bits |= uint64_t{1} << q;
    }
    return CutMask(num_qubits, bits);
}

int CutMask::weight() const {
    return popcount(bits_);
}

CutMask CutMask::complement() const {
    return CutMask(num_qubits_, bits_ ^ low_mask(num_qubits_));
}

bool CutMask::nontrivial() const {
    return bits_ != 0 && bits_ != low_mask(num_qubits_);
}

std::string CutMask::to_string() const {
    return bits_to_string(bits_, num_qubits_);
}

SetPartition::SetPartition(int num_qubits, std::vector<std::vector<int>> parts)
    : num_qubits_(num_qubits), parts_(std::move(parts)) {
}

SetPartition SetPartition::from_parts(int num_qubits, std::vector<std::vector<int>> parts) {
    if (num_qubits < 1 || num_qubits > 63) {
        throw std::invalid_argument("SetPartition: num_qubits out of range");
    }
    std::vector<bool> seen(num_qubits, false);
    int covered = 0;
    for (auto &p : parts) {
        if (p.empty()) {
            throw std::invalid_argument("SetPartition: empty part");
        }
        std::sort(p.begin(), p.end());
        for (int q : p) {
            if (q < 0 || q >= num_qubits) {
                throw std::invalid_argument("SetPartition: qubit index out of range");
            }
            if (seen[q]) {
                throw std::invalid_argument("SetPartition: parts overlap");
            }
            seen[q] = true;
            covered++;
        }
    }
    if (covered != num_qubits) {
        throw std::invalid_argument("SetPartition: parts do not cover every qubit");
    }
    std::sort(parts.begin(), parts.end(), [](const auto &a, const auto &b) { return a.front() < b.front(); });
    return SetPartition(num_qubits, std::move(parts));
}

SetPartition SetPartition::single_part(int num_qubits) {
    std::vector<int> all(num_qubits);
    for (int i = 0; i < num_qubits; i++) {
        all[i] = i;
    }
    return from_parts(num_qubits, {all});
}

SetPartition SetPartition::singletons(int num_qubits) {
    std::vector<std::vector<int>> parts;
    for (int i = 0; i < num_qubits; i++) {
        parts.push_back({i});
    }
    return from_parts(num_qubits, std::move(parts));
}

SetPartition SetPartition::blocks(std::span<const int> sizes) {
    std::vector<std::vector<int>> parts;
    int next = 0;
    for (int s : sizes) {
        std::vector<int> p;
        for (int j = 0; j < s; j++) {
            p.push_back(next++);
        }
        parts.push_back(std::move(p));
    }
    return from_parts(next, std::move(parts));
}

uint64_t SetPartition::part_mask(size_t k) const {
    uint64_t m = 0;
    for (int q : parts_.at(k)) {
        m |= uint64_t{1} << q;
    }
    return m;
}

int SetPartition::max_part_size() const {
    size_t best = 0;
    for (const auto &p : parts_) {
        best = std::max(best, p.size());
    }
    return static_cast<int>(best);
}

int SetPartition::min_part_size() const {
    size_t best = parts_.front().size();
    for (const auto &p : parts_) {
        best = std::min(best, p.size());
    }
    return static_cast<int>(best);
}

size_t SetPartition::part_of(int qubit) const {
    for (size_t k = 0; k < parts_.size(); k++) {
        if (std::binary_search(parts_[k].begin(), parts_[k].end(), qubit)) {
            return k;
        }
    }
    throw std::out_of_range("qubit not in partition");
}

bool SetPartition::in_cut_subspace(uint64_t y) const {
    for (size_t k = 0; k < parts_.size(); k++) {
        if (parity_dot(y, part_mask(k))) {
            return false;
        }
    }
    return true;
}

std::string SetPartition::to_string() const {
    std::ostringstream out;
    out << "{";
    for (size_t k = 0; k < parts_.size(); k++) {
        if (k) {
            out << ",";
        }
        out << "{";
        for (size_t j = 0; j < parts_[k].size(); j++) {
            if (j) {
                out << ",";
            }
            out << parts_[k][j];
        }
        out << "}";
    }
    out << "}";
    return out.str();
}

PureState haar_random_state(int num_qubits, Rng &rng, int max_qubits) {
    if (num_qubits < 1 || num_qubits > max_qubits) {
        throw std::invalid_argument("haar_random_state: n out of range");
    }
    std::vector<Complex> amps(uint64_t{1} << num_qubits);
    for (auto &a : amps) {
        double re = rng.normal();
        double im = rng.normal();
        a = Complex(re, im);
    }
    return PureState::normalized(std::move(amps));
}

PureState product_state(std::span<const std::pair<PureState, std::vector<int>>> factors) {
    if (factors.empty()) {
        throw std::invalid_argument("product_state: no factors");
    }
    std::vector<std::vector<int>> parts;
    for (const auto &[factor, qubits] : factors) {
        if (static_cast<int>(qubits.size()) != factor.num_qubits()) {
            throw std::invalid_argument("product_state: factor size does not match its qubit set");
        }
        parts.push_back(qubits);
    }
    int n = 0;
    for (const auto &p : parts) {
        n += static_cast<int>(p.size());
    }
    // Validates disjointness and coverage.
    SetPartition::from_parts(n, parts);

    uint64_t dim = uint64_t{1} << n;
    std::vector<Complex> amps(dim, Complex(1.0, 0.0));
    for (const auto &[factor, qubits] : factors) {
        // Qubit j of the factor sits at global qubit qubits[j], which need not be sorted.
        for (uint64_t i = 0; i < dim; i++) {
            uint64_t local = 0;
            for (size_t j = 0; j < qubits.size(); j++) {
                local |= ((i >> qubits[j]) & 1) << j;
            }
            amps[i] *= factor[local];
        }
    }
    return PureState::from_amplitudes(std::move(amps), 1e-9);
}

std::vector<int> invert_permutation(std::span<const int> perm) {
    std::vector<int> inv(perm.size(), -1);
    for (size_t i = 0; i < perm.size(); i++) {
        int p = perm[i];
        if (p < 0 || static_cast<size_t>(p) >= perm.size() || inv[p] != -1) {
            throw std::invalid_argument("invalid permutation");
        }
        inv[p] = static_cast<int>(i);
    }
    return inv;
}

std::vector<int> compose_permutations(std::span<const int> second, std::span<const int> first) {
    if (second.size() != first.size()) {
        throw std::invalid_argument("permutation sizes differ");
    }
    invert_permutation(second);
    invert_permutation(first);
    std::vector<int> out(first.size());
    for (size_t i = 0; i < first.size(); i++) {
        out[i] = second[first[i]];
    }
    return out;
}

PureState apply_qubit_permutation(const PureState &state, std::span<const int> perm) {
    int n = state.num_qubits();
    if (static_cast<int>(perm.size()) != n) {
        throw std::invalid_argument("permutation size does not match state");
    }
    invert_permutation(perm);
    std::vector<Complex> out(state.dimension());
    for (uint64_t i = 0; i < state.dimension(); i++) {
        uint64_t j = 0;
        for (int q = 0; q < n; q++) {
            j |= ((i >> q) & 1) << perm[q];
        }
        out[j] = state[i];
    }
    return PureState::from_amplitudes(std::move(out), 1e-9);
}

PureState uniform_schmidt_state(int num_qubits, double weight, Rng &rng) {
    if (num_qubits < 1 || num_qubits > kDefaultMaxQubits) {
        throw std::invalid_argument("uniform_schmidt_state: n out of range");
    }
    if (!(weight >= 0.0 && weight <= 1.0)) {
        throw std::invalid_argument("Schmidt weight must lie in [0, 1]");
    }
    // Column 0 is a Haar qubit state (a, b); column 1 is (-b*, a*).
    std::vector<std::array<Complex, 4>> rotations;
    for (int q = 0; q < num_qubits; q++) {
        PureState u = haar_random_state(1, rng);
        Complex a = u[0];
        Complex b = u[1];
        rotations.push_back({a, b, -std::conj(b), std::conj(a)});
    }
    double c0 = std::sqrt(weight);
    double c1 = std::sqrt(1.0 - weight);
    std::vector<Complex> amps(uint64_t{1} << num_qubits);
    for (uint64_t i = 0; i < amps.size(); i++) {
        Complex t0 = c0;
        Complex t1 = c1;
        for (int q = 0; q < num_qubits; q++) {
            int bit = (i >> q) & 1;
            t0 *= rotations[q][bit];
            t1 *= rotations[q][2 + bit];
        }
        amps[i] = t0 + t1;
    }
    return PureState::normalized(std::move(amps));
}

double schmidt_weight_for_epsilon(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= std::sqrt(0.5) + 1e-15)) {
        throw std::invalid_argument("uniform Schmidt certificates lie in [0, 1/sqrt(2)]");
    }
    // 2 l (1 - l) = eps^2.
    double disc = std::max(0.0, 1.0 - 2.0 * epsilon * epsilon);
    return 0.5 * (1.0 - std::sqrt(disc));
}

std::string describe(const FactorSpec &spec) {
    if (std::holds_alternative<HaarFactors>(spec)) {
        return "haar";
    }
    if (const auto *s = std::get_if<SchmidtSpectrumFactors>(&spec)) {
        std::ostringstream out;
        out << "schmidt-spectrum:";
        for (size_t k = 0; k < s->weights.size(); k++) {
            out << (k ? "," : "") << s->weights[k];
        }
        return out.str();
    }
    return "explicit";
}

PlantedInstance plant_instance(
    const SetPartition &partition, const FactorSpec &spec, Rng &rng, const PlantOptions &options) {
    int n = partition.num_qubits();
    if (n > kDefaultMaxQubits) {
        throw std::invalid_argument("plant_instance: too many qubits");
    }
    bool has_singleton = partition.min_part_size() < 2;
    if (has_singleton && !options.allow_singletons) {
        throw std::invalid_argument(
            "plant_instance: single-qubit parts have no internal cut, so no epsilon certificate exists");
    }

    std::vector<std::pair<PureState, std::vector<int>>> factors;
    for (size_t k = 0; k < partition.num_parts(); k++) {
        const auto &qubits = partition.part(k);
        int size = static_cast<int>(qubits.size());
        if (std::holds_alternative<HaarFactors>(spec)) {
            factors.emplace_back(haar_random_state(size, rng), qubits);
        } else if (const auto *s = std::get_if<SchmidtSpectrumFactors>(&spec)) {
            if (s->weights.empty() || (s->weights.size() != 1 && s->weights.size() != partition.num_parts())) {
                throw std::invalid_argument("schmidt-spectrum: need one weight or one per part");
            }
            double w = s->weights.size() == 1 ? s->weights[0] : s->weights[k];
            factors.emplace_back(uniform_schmidt_state(size, w, rng), qubits);
        } else {
            const auto &ex = std::get<ExplicitFactors>(spec);
            if (ex.factors.size() != partition.num_parts()) {
                throw std::invalid_argument("explicit factors: need one state per part");
            }
            factors.emplace_back(ex.factors[k], qubits);
        }
    }

    PlantedInstance inst{product_state(factors), partition, std::nullopt, describe(spec)};
    if (!has_singleton) {
        double eps = epsilon_certificate(inst.state, partition);
        if (eps < options.epsilon_floor) {
            std::ostringstream msg;
            msg << "plant_instance: certified epsilon " << eps << " below floor " << options.epsilon_floor;
            throw std::invalid_argument(msg.str());
        }
        inst.epsilon_certified = eps;
    }
    return inst;
}

}  // namespace hiddencut

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

#include "hiddencut/purity.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "hiddencut/bits.h"

namespace hiddencut {

namespace {

/// Scratch buffers reused across masks of one state.
struct GramWorkspace {
    std::vector<double> re;
    std::vector<double> im;
};

double purity_impl(const PureState &state, uint64_t mask, GramWorkspace &ws) {
    int n = state.num_qubits();
    uint64_t full = low_mask(n);
    if (mask == 0 || mask == full) {
        return 1.0;
    }
    uint64_t rows_mask = mask;
    if (popcount(mask) > n - popcount(mask)) {
        rows_mask = full ^ mask;
    }
    uint64_t cols_mask = full ^ rows_mask;
    auto row_dep = deposit_table(rows_mask);
    auto col_dep = deposit_table(cols_mask);
    size_t num_rows = row_dep.size();
    size_t num_cols = col_dep.size();

    ws.re.resize(num_rows * num_cols);
    ws.im.resize(num_rows * num_cols);
    auto amps = state.amplitudes();
    for (size_t r = 0; r < num_rows; r++) {
        double *re = ws.re.data() + r * num_cols;
        double *im = ws.im.data() + r * num_cols;
        for (size_t c = 0; c < num_cols; c++) {
            const Complex &a = amps[row_dep[r] | col_dep[c]];
            re[c] = a.real();
            im[c] = a.imag();
        }
    }

    double diag = 0;
    double off = 0;
    for (size_t a = 0; a < num_rows; a++) {
        const double *ar = ws.re.data() + a * num_cols;
        const double *ai = ws.im.data() + a * num_cols;
        double g = 0;
        for (size_t c = 0; c < num_cols; c++) {
            g += ar[c] * ar[c] + ai[c] * ai[c];
        }
        diag += g * g;
        for (size_t b = a + 1; b < num_rows; b++) {
            const double *br = ws.re.data() + b * num_cols;
            const double *bi = ws.im.data() + b * num_cols;
            double gr = 0;
            double gi = 0;
            for (size_t c = 0; c < num_cols; c++) {
                gr += ar[c] * br[c] + ai[c] * bi[c];
                gi += ai[c] * br[c] - ar[c] * bi[c];
            }
            off += gr * gr + gi * gi;
        }
    }
    return diag + 2.0 * off;
}

void check_mask(const PureState &state, uint64_t mask) {
    if (mask >> state.num_qubits()) {
        throw std::invalid_argument("mask has bits beyond the state's qubits");
    }
}

}  // namespace

double purity(const PureState &state, const CutMask &mask) {
    if (mask.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("mask length does not match state");
    }
    GramWorkspace ws;
    return purity_impl(state, mask.bits(), ws);
}

double purity(const PureState &state, uint64_t mask) {
    check_mask(state, mask);
    GramWorkspace ws;
    return purity_impl(state, mask, ws);
}

EntanglementFeature entanglement_feature(const PureState &state, int max_qubits) {
    int n = state.num_qubits();
    if (n > max_qubits) {
        throw std::invalid_argument("entanglement_feature: too many qubits for the cost guard");
    }
    uint64_t full = low_mask(n);
    EntanglementFeature feature{n, std::vector<double>(full + 1, 1.0)};
    GramWorkspace ws;
    for (uint64_t x = 1; x < full; x++) {
        uint64_t xc = full ^ x;
        if (x > xc) {
            continue;
        }
        double p = purity_impl(state, x, ws);
        feature.values[x] = p;
        feature.values[xc] = p;
    }
    return feature;
}

double epsilon_certificate(const PureState &state, const SetPartition &partition) {
    if (partition.num_qubits() != state.num_qubits()) {
        throw std::invalid_argument("partition size does not match state");
    }
    GramWorkspace ws;
    double best = 0;
    for (size_t k = 0; k < partition.num_parts(); k++) {
        uint64_t part = partition.part_mask(k);
        if (popcount(part) < 2) {
            throw std::invalid_argument("epsilon_certificate: single-qubit part has no internal cut");
        }
        if (purity_impl(state, part, ws) < 1.0 - kPureTolerance) {
            throw std::invalid_argument("epsilon_certificate: state is not product across the partition");
        }
        // Each internal cut {s, part \ s} is visited once: s holds the part's lowest qubit.
        uint64_t lowest = part & (~part + 1);
        uint64_t rest = part ^ lowest;
        for (uint64_t sub = rest;; sub = (sub - 1) & rest) {
            uint64_t s = sub | lowest;
            if (s != part) {
                best = std::max(best, purity_impl(state, s, ws));
            }
            if (sub == 0) {
                break;
            }
        }
    }
    return std::sqrt(std::max(0.0, 1.0 - best));
}

SetPartition cut_search_from_feature(const EntanglementFeature &feature, double tol) {
    int n = feature.num_qubits;
    if (feature.values.size() != (uint64_t{1} << n)) {
        throw std::invalid_argument("feature length does not match n");
    }
    std::vector<uint64_t> pure_masks;
    for (uint64_t x = 0; x < feature.values.size(); x++) {
        if (feature.values[x] >= 1.0 - tol) {
            pure_masks.push_back(x);
        }
    }
    // Qubits are equivalent iff they agree on every pure mask.
    std::map<std::vector<bool>, std::vector<int>> classes;
    for (int q = 0; q < n; q++) {
        std::vector<bool> column;
        column.reserve(pure_masks.size());
        for (uint64_t x : pure_masks) {
            column.push_back((x >> q) & 1);
        }
        classes[column].push_back(q);
    }
    std::vector<std::vector<int>> parts;
    for (auto &[_, qubits] : classes) {
        parts.push_back(std::move(qubits));
    }
    if (parts.size() >= 63 || pure_masks.size() != (uint64_t{1} << parts.size())) {
        std::ostringstream msg;
        msg << "brute_force_cut_search: " << pure_masks.size() << " pure masks cannot be the unions of "
            << parts.size() << " parts (tolerance too loose?)";
        throw InconsistentMaskSet(msg.str());
    }
    return SetPartition::from_parts(n, std::move(parts));
}

SetPartition brute_force_cut_search(const PureState &state, double tol) {
    return cut_search_from_feature(entanglement_feature(state), tol);
}

}  // namespace hiddencut

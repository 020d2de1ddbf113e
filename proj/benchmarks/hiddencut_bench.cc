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


#include <benchmark/benchmark.h>

#include <vector>

#include "hiddencut/bits.h"
#include "hiddencut/circuit.h"
#include "hiddencut/gf2.h"
#include "hiddencut/purity.h"
#include "hiddencut/rng.h"
#include "hiddencut/statevec.h"
#include "hiddencut/wht.h"

using namespace hiddencut;

namespace {

void BM_walsh_hadamard(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    Rng rng(1);
    std::vector<double> values(size_t{1} << n);
    for (auto &v : values) {
        v = rng.uniform();
    }
    for (auto _ : state) {
        walsh_hadamard_inplace(values);
        benchmark::DoNotOptimize(values.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(values.size()));
}
BENCHMARK(BM_walsh_hadamard)->DenseRange(10, 20, 2);

void BM_entanglement_feature(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    Rng rng(2);
    auto psi = haar_random_state(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(entanglement_feature(psi));
    }
}
BENCHMARK(BM_entanglement_feature)->DenseRange(4, 12, 2)->Unit(benchmark::kMillisecond);

void BM_purity_single_mask(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    Rng rng(3);
    auto psi = haar_random_state(n, rng);
    CutMask mask(n, low_mask(n / 2));
    for (auto _ : state) {
        benchmark::DoNotOptimize(purity(psi, mask));
    }
}
BENCHMARK(BM_purity_single_mask)->DenseRange(6, 14, 2);

void BM_statehsp_distribution(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    Rng rng(4);
    auto feature = entanglement_feature(haar_random_state(n, rng));
    for (auto _ : state) {
        benchmark::DoNotOptimize(statehsp_distribution(feature, 8));
    }
}
BENCHMARK(BM_statehsp_distribution)->DenseRange(6, 12, 2);

void BM_gf2_rref(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    Rng rng(5);
    GF2Matrix m{n, {}};
    for (int r = 0; r < n; r++) {
        GF2Vector row(n);
        for (int c = 0; c < n; c++) {
            row.set(c, rng.next_u64() & 1);
        }
        m.push_row(row);
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(rref(m));
    }
}
BENCHMARK(BM_gf2_rref)->RangeMultiplier(2)->Range(32, 512);

void BM_fourier_circuit(benchmark::State &state) {
    int n = static_cast<int>(state.range(0));
    Rng rng(6);
    auto psi = haar_random_state(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_fourier_sampling_circuit(psi, 2));
    }
}
BENCHMARK(BM_fourier_circuit)->DenseRange(2, 6, 1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

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


#ifndef HIDDENCUT_IO_H
#define HIDDENCUT_IO_H

#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>

#include "hiddencut/haarstats.h"
#include "hiddencut/purity.h"
#include "hiddencut/solver.h"
#include "hiddencut/statevec.h"
#include "hiddencut/wht.h"

namespace hiddencut {

using json = nlohmann::json;

/// Version string compiled into the library.
std::string library_version();

/// Description of the bit convention embedded in every output file.
inline constexpr const char *kConventionFlag = "little-endian";

/// Header embedded in every emitted record: tool, version, convention, seed, config.
json provenance_header(const json &config, uint64_t seed);

/// Writes the header as '#'-prefixed lines ahead of a CSV table.
void write_csv_preamble(std::ostream &out, const json &header);

json encode(const PureState &state);
json encode(const SetPartition &partition);
json encode(const PlantedInstance &instance);
json encode(const EntanglementFeature &feature);
json encode(const FourierDistribution &dist);
json encode(const SolveReport &report);
json encode(const MomentReport &report);
json encode(const PiEstimate &estimate);

PureState decode_state(const json &j);
SetPartition decode_partition(const json &j, int num_qubits);
PlantedInstance decode_instance(const json &j);

/// Binary statevector record: "HCPS", uint32 format version, uint32 n, then
/// 2^n (re, im) float64 pairs, all little-endian.
void write_state_binary(std::ostream &out, const PureState &state);
PureState read_state_binary(std::istream &in);

/// Columns: mask (qubit 0 first), weight, purity.
void write_feature_csv(std::ostream &out, const EntanglementFeature &feature);
/// Columns: outcome (qubit 0 first), weight, probability.
void write_distribution_csv(std::ostream &out, const FourierDistribution &dist);
/// Per-weight purity table followed by the per-outcome Fourier table.
void write_moment_csv(std::ostream &out, const MomentReport &report);

/// One line of a batch summary table.
struct BatchRow {
    uint64_t trial = 0;
    uint64_t seed = 0;
    int n = 0;
    std::string mode;
    int t = 0;
    double epsilon = 0;
    uint64_t draws = 0;
    uint64_t swap_tests = 0;
    uint64_t copies = 0;
    int rank = 0;
    bool success = false;
};

void write_batch_csv_header(std::ostream &out);
void write_batch_csv_row(std::ostream &out, const BatchRow &row);

}  // namespace hiddencut

#endif

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


#include "hiddencut/io.h"

#include <bit>
#include <cstring>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hiddencut/bits.h"

#ifndef HIDDENCUT_VERSION
#define HIDDENCUT_VERSION "unknown"
#endif

namespace hiddencut {

static_assert(std::endian::native == std::endian::little, "binary records assume a little-endian host");

namespace {

constexpr char kStateMagic[4] = {'H', 'C', 'P', 'S'};
constexpr uint32_t kStateFormatVersion = 1;

json optional_number(const std::optional<double> &v) {
    return v ? json(*v) : json(nullptr);
}

}  // namespace

std::string library_version() {
    return HIDDENCUT_VERSION;
}

json provenance_header(const json &config, uint64_t seed) {
    return json{
        {"tool", "hiddencut"},
        {"version", library_version()},
        {"convention", kConventionFlag},
        {"convention_detail", "bit i of every index and mask is qubit i; bitstrings list qubit 0 first"},
        {"seed", seed},
        {"config", config},
    };
}

void write_csv_preamble(std::ostream &out, const json &header) {
    for (const auto &[key, value] : header.items()) {
        out << "# " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
}

json encode(const PureState &state) {
    json amps = json::array();
    for (const Complex &a : state.amplitudes()) {
        amps.push_back(a.real());
        amps.push_back(a.imag());
    }
    return json{{"n", state.num_qubits()}, {"amplitudes_re_im", std::move(amps)}};
}

PureState decode_state(const json &j) {
    int n = j.at("n").get<int>();
    const auto &flat = j.at("amplitudes_re_im");
    if (n < 1 || n > 30 || flat.size() != (size_t{2} << n)) {
        throw std::invalid_argument("state record: amplitude count does not match n");
    }
    std::vector<Complex> amps(size_t{1} << n);
    for (size_t i = 0; i < amps.size(); i++) {
        amps[i] = Complex(flat[2 * i].get<double>(), flat[2 * i + 1].get<double>());
    }
    return PureState::from_amplitudes(std::move(amps));
}

json encode(const SetPartition &partition) {
    return json(partition.parts());
}

SetPartition decode_partition(const json &j, int num_qubits) {
    return SetPartition::from_parts(num_qubits, j.get<std::vector<std::vector<int>>>());
}

json encode(const PlantedInstance &instance) {
    return json{
        {"truth", encode(instance.truth)},
        {"epsilon_certified", optional_number(instance.epsilon_certified)},
        {"factor_spec", instance.factor_spec},
        {"state", encode(instance.state)},
    };
}

PlantedInstance decode_instance(const json &j) {
    PureState state = decode_state(j.at("state"));
    SetPartition truth = decode_partition(j.at("truth"), state.num_qubits());
    std::optional<double> eps;
    if (j.contains("epsilon_certified") && !j["epsilon_certified"].is_null()) {
        eps = j["epsilon_certified"].get<double>();
    }
    return PlantedInstance{std::move(state), std::move(truth), eps, j.value("factor_spec", std::string("explicit"))};
}

json encode(const EntanglementFeature &feature) {
    return json{{"n", feature.num_qubits}, {"purities", feature.values}};
}

json encode(const FourierDistribution &dist) {
    return json{
        {"n", dist.num_qubits},
        {"t", dist.copies_t},
        {"negative_mass", dist.negative_mass},
        {"probabilities", dist.probs},
    };
}

json encode(const SolveReport &report) {
    int n = report.num_qubits;
    json samples = json::array();
    for (uint64_t y : report.samples) {
        samples.push_back(bits_to_string(y, n));
    }
    json rounds = json::array();
    for (const auto &r : report.round_stats) {
        rounds.push_back({{"round", r.round}, {"span_dim", r.span_dim}, {"draws", r.draws}, {"accepted", r.accepted}});
    }
    json candidates = json::array();
    for (const auto &c : report.candidates) {
        candidates.push_back({
            {"mask", bits_to_string(c.mask, n)},
            {"accepted", c.accepted},
            {"copies", c.copies},
            {"acceptance_prob_exact", c.acceptance_prob_exact},
            {"is_true_cut", c.is_true_cut ? json(*c.is_true_cut) : json(nullptr)},
        });
    }
    return json{
        {"mode", to_string(report.mode)},
        {"n", n},
        {"t", report.t},
        {"epsilon", optional_number(report.epsilon)},
        {"recovered", report.recovered ? encode(*report.recovered) : json(nullptr)},
        {"success", report.success ? json(*report.success) : json(nullptr)},
        {"failure_reason", report.failure_reason},
        {"draws", report.draws},
        {"swap_tests", report.swap_tests},
        {"copies_consumed", report.copies_consumed},
        {"rounds", report.rounds},
        {"batches", report.batches},
        {"inferred_parts", report.inferred_parts},
        {"rank_trace", report.rank_trace},
        {"kept", report.kept},
        {"samples", std::move(samples)},
        {"round_stats", std::move(rounds)},
        {"candidates", std::move(candidates)},
    };
}

json encode(const MomentReport &report) {
    json weights = json::array();
    for (const auto &w : report.purity_by_weight) {
        weights.push_back({
            {"weight", w.weight},
            {"masks", w.masks},
            {"empirical_mean", w.empirical_mean},
            {"closed_mean", w.closed_mean},
            {"standard_error", w.standard_error},
            {"z", w.z_score},
        });
    }
    json fourier = json::array();
    for (const auto &f : report.fourier) {
        fourier.push_back({
            {"y", bits_to_string(f.y, report.n)},
            {"weight", f.weight},
            {"empirical_mean", f.empirical_mean},
            {"empirical_variance", f.empirical_variance},
            {"closed_mean", f.closed_mean},
            {"closed_variance", f.closed_variance},
            {"z", f.z_score},
            {"relative_deviation", f.relative_deviation},
        });
    }
    return json{
        {"n", report.n},
        {"trials", report.trials},
        {"seed", report.seed},
        {"degenerate", report.degenerate},
        {"max_abs_purity_z", report.max_abs_purity_z},
        {"max_abs_fourier_z", report.max_abs_fourier_z},
        {"max_relative_deviation", report.max_relative_deviation},
        {"max_odd_weight_mass", report.max_odd_weight_mass},
        {"purity_by_weight", std::move(weights)},
        {"fourier", std::move(fourier)},
    };
}

json encode(const PiEstimate &estimate) {
    return json{
        {"n", estimate.n},
        {"k", estimate.k},
        {"trials", estimate.trials},
        {"independent", estimate.independent},
        {"estimate", estimate.estimate},
        {"wilson_lo", estimate.wilson.lo},
        {"wilson_hi", estimate.wilson.hi},
        {"analytic_lower_bound", estimate.lower_bound},
    };
}

void write_state_binary(std::ostream &out, const PureState &state) {
    uint32_t n = static_cast<uint32_t>(state.num_qubits());
    out.write(kStateMagic, 4);
    out.write(reinterpret_cast<const char *>(&kStateFormatVersion), sizeof(uint32_t));
    out.write(reinterpret_cast<const char *>(&n), sizeof(uint32_t));
    for (const Complex &a : state.amplitudes()) {
        double re_im[2] = {a.real(), a.imag()};
        out.write(reinterpret_cast<const char *>(re_im), sizeof(re_im));
    }
    if (!out) {
        throw std::runtime_error("write_state_binary: stream error");
    }
}

PureState read_state_binary(std::istream &in) {
    char magic[4];
    uint32_t version = 0;
    uint32_t n = 0;
    in.read(magic, 4);
    in.read(reinterpret_cast<char *>(&version), sizeof(uint32_t));
    in.read(reinterpret_cast<char *>(&n), sizeof(uint32_t));
    if (!in || std::memcmp(magic, kStateMagic, 4) != 0) {
        throw std::runtime_error("read_state_binary: not a statevector record");
    }
    if (version != kStateFormatVersion || n < 1 || n > 30) {
        throw std::runtime_error("read_state_binary: unsupported version or qubit count");
    }
    std::vector<Complex> amps(size_t{1} << n);
    for (auto &a : amps) {
        double re_im[2];
        in.read(reinterpret_cast<char *>(re_im), sizeof(re_im));
        a = Complex(re_im[0], re_im[1]);
    }
    if (!in) {
        throw std::runtime_error("read_state_binary: truncated record");
    }
    return PureState::from_amplitudes(std::move(amps));
}

void write_feature_csv(std::ostream &out, const EntanglementFeature &feature) {
    out << "mask,weight,purity\n";
    out.precision(17);
    for (uint64_t x = 0; x < feature.values.size(); x++) {
        out << bits_to_string(x, feature.num_qubits) << "," << popcount(x) << "," << feature.values[x] << "\n";
    }
}

void write_distribution_csv(std::ostream &out, const FourierDistribution &dist) {
    out << "outcome,weight,probability\n";
    out.precision(17);
    for (uint64_t y = 0; y < dist.probs.size(); y++) {
        out << bits_to_string(y, dist.num_qubits) << "," << popcount(y) << "," << dist.probs[y] << "\n";
    }
}

void write_moment_csv(std::ostream &out, const MomentReport &report) {
    out.precision(10);
    out << "table,key,weight,empirical_mean,closed_mean,z\n";
    for (const auto &w : report.purity_by_weight) {
        out << "purity," << w.weight << "," << w.weight << "," << w.empirical_mean << "," << w.closed_mean << ","
            << w.z_score << "\n";
    }
    for (const auto &f : report.fourier) {
        out << "fourier," << bits_to_string(f.y, report.n) << "," << f.weight << "," << f.empirical_mean << ","
            << f.closed_mean << "," << f.z_score << "\n";
    }
}

void write_batch_csv_header(std::ostream &out) {
    out << "trial,seed,n,mode,t,epsilon,draws,swap_tests,copies,rank,success\n";
}

void write_batch_csv_row(std::ostream &out, const BatchRow &row) {
    out << row.trial << "," << row.seed << "," << row.n << "," << row.mode << "," << row.t << "," << row.epsilon
        << "," << row.draws << "," << row.swap_tests << "," << row.copies << "," << row.rank << ","
        << (row.success ? 1 : 0) << "\n";
}

}  // namespace hiddencut

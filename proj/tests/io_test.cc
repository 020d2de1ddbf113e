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

#include <sstream>
#include <string>

#include "gtest/gtest.h"

using namespace hiddencut;

namespace {

PlantedInstance sample_instance(uint64_t seed) {
    Rng rng(seed);
    return plant_instance(SetPartition::from_parts(5, {{0, 3}, {1, 2, 4}}), HaarFactors{}, rng);
}

}  // namespace

TEST(io, state_json_round_trip_is_bit_exact) {
    auto inst = sample_instance(1);
    json j = encode(inst.state);
    ASSERT_EQ(j.at("n"), 5);
    auto back = decode_state(json::parse(j.dump()));
    ASSERT_EQ(back, inst.state);
}

TEST(io, instance_round_trip) {
    auto inst = sample_instance(2);
    auto back = decode_instance(json::parse(encode(inst).dump()));
    ASSERT_EQ(back.state, inst.state);
    ASSERT_EQ(back.truth, inst.truth);
    ASSERT_EQ(back.epsilon_certified, inst.epsilon_certified);
    ASSERT_EQ(back.factor_spec, inst.factor_spec);
}

TEST(io, partition_round_trip) {
    auto p = SetPartition::from_parts(4, {{0, 2}, {1, 3}});
    ASSERT_EQ(decode_partition(encode(p), 4), p);
    ASSERT_THROW(decode_partition(json::parse("[[0,1],[1,2]]"), 3), std::invalid_argument);
}

TEST(io, bad_state_record) {
    ASSERT_THROW(decode_state(json::parse(R"({"n": 2, "amplitudes_re_im": [1, 0]})")), std::invalid_argument);
}

TEST(io, binary_round_trip_is_bit_exact) {
    auto inst = sample_instance(3);
    std::stringstream buf;
    write_state_binary(buf, inst.state);
    ASSERT_EQ(buf.str().size(), 12u + 32u * 16u);
    ASSERT_EQ(read_state_binary(buf), inst.state);
}

TEST(io, binary_rejects_bad_input) {
    std::stringstream bad(std::string("XXXX\1\0\0\0\1\0\0\0", 12));
    ASSERT_THROW(read_state_binary(bad), std::runtime_error);
    auto inst = sample_instance(4);
    std::stringstream buf;
    write_state_binary(buf, inst.state);
    std::stringstream truncated(buf.str().substr(0, 40));
    ASSERT_THROW(read_state_binary(truncated), std::runtime_error);
}

TEST(io, provenance_header_fields) {
    auto h = provenance_header(json{{"n", 4}}, 42);
    ASSERT_EQ(h.at("tool"), "hiddencut");
    ASSERT_EQ(h.at("version"), library_version());
    ASSERT_EQ(h.at("convention"), "little-endian");
    ASSERT_EQ(h.at("seed"), 42);
    ASSERT_EQ(h.at("config").at("n"), 4);
    std::ostringstream out;
    write_csv_preamble(out, h);
    ASSERT_NE(out.str().find("# convention: little-endian"), std::string::npos);
}

TEST(io, report_encoding) {
    auto inst = sample_instance(5);
    Rng rng(5);
    SolverConfig cfg;
    auto report = solve(inst, cfg, rng);
    json j = encode(report);
    ASSERT_EQ(j.at("mode"), "nonadaptive");
    ASSERT_EQ(j.at("draws"), report.draws);
    ASSERT_EQ(j.at("samples").size(), report.draws);
    ASSERT_EQ(j.at("copies_consumed"), report.copies_consumed);
}

TEST(io, csv_writers) {
    auto feature = entanglement_feature(PureState::normalized({1, 0, 0, 1}));
    std::ostringstream f;
    write_feature_csv(f, feature);
    ASSERT_EQ(f.str().substr(0, 18), "mask,weight,purity");
    auto row = f.str().find("\n10,1,");
    ASSERT_NE(row, std::string::npos);
    ASSERT_NEAR(std::stod(f.str().substr(row + 6)), 0.5, 1e-15);

    std::ostringstream d;
    write_distribution_csv(d, statehsp_distribution(feature, 2));
    ASSERT_NE(d.str().find("\n11,2,"), std::string::npos);

    std::ostringstream b;
    write_batch_csv_header(b);
    write_batch_csv_row(b, BatchRow{3, 9, 8, "adaptive", 8, 0.5, 20, 0, 160, 6, true});
    ASSERT_EQ(b.str(), "trial,seed,n,mode,t,epsilon,draws,swap_tests,copies,rank,success\n3,9,8,adaptive,8,0.5,20,0,160,6,1\n");
}

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


#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "hiddencut/io.h"

using namespace hiddencut;

namespace {

std::filesystem::path scratch(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / "hiddencut_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

int run(const std::string &args) {
    std::string cmd = std::string(HIDDENCUT_CLI_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json load(const std::filesystem::path &path) {
    return json::parse(slurp(path));
}

}  // namespace

TEST(cli, plant_round_trip_is_bit_exact) {
    auto out = scratch("plant.json");
    auto bin = scratch("plant.bin");
    ASSERT_EQ(run("plant --parts 4,4 --seed 11 --out " + out.string() + " --binary " + bin.string()), 0);
    auto j = load(out);
    ASSERT_EQ(j.at("header").at("seed"), 11);
    ASSERT_EQ(j.at("header").at("convention"), "little-endian");
    auto inst = decode_instance(j.at("instance"));

    Rng rng(11);
    std::vector<int> sizes = {4, 4};
    auto expected = plant_instance(SetPartition::blocks(sizes), HaarFactors{}, rng);
    ASSERT_EQ(inst.state, expected.state);
    ASSERT_EQ(inst.truth, expected.truth);

    std::ifstream in(bin, std::ios::binary);
    ASSERT_EQ(read_state_binary(in), expected.state);
}

TEST(cli, plant_refuses_singletons) {
    ASSERT_EQ(run("plant --parts 4,1"), 3);
}

TEST(cli, invalid_configuration_exit_code) {
    ASSERT_EQ(run("solve --no-such-flag"), 3);
    ASSERT_EQ(run("solve --parts 4,4 --mode greedy"), 3);
    ASSERT_EQ(run("solve --parts 4,4 --format xml"), 3);
    ASSERT_EQ(run("solve --parts 4,4 --n 9"), 3);
    ASSERT_EQ(run(""), 3);
}

TEST(cli, solve_is_deterministic_and_consistent) {
    auto a = scratch("solve_a.json");
    auto b = scratch("solve_b.json");
    auto csv = scratch("solve.csv");
    std::string args = "solve --parts 3,3 --trials 6 --seed 5 --threads 3 --aggregate " + csv.string() + " --out ";
    ASSERT_EQ(run(args + a.string()), 0);
    ASSERT_EQ(run("solve --parts 3,3 --trials 6 --seed 5 --threads 1 --out " + b.string()), 0);
    ASSERT_EQ(slurp(a), slurp(b));

    auto j = load(a);
    const auto &summary = j.at("summary");
    uint64_t successes = 0;
    for (const auto &r : j.at("reports")) {
        successes += r.at("report").at("success").get<bool>();
    }
    ASSERT_EQ(summary.at("successes").get<uint64_t>(), successes);
    ASSERT_EQ(summary.at("successes").get<uint64_t>() + summary.at("failures").get<uint64_t>(), 6u);

    std::string table = slurp(csv);
    ASSERT_NE(table.find("# seed: 5"), std::string::npos);
    ASSERT_NE(table.find("trial,seed,n,mode"), std::string::npos);
}

TEST(cli, solve_min_success_breach) {
    ASSERT_EQ(run("solve --parts 3,3 --trials 3 --min-success 1.0"), 0);
    // A bipartition-only solver cannot recover three parts.
    ASSERT_EQ(run("solve --parts 2,2,2 --trials 2 --mode haar_t2 --min-success 0.5"), 2);
    ASSERT_EQ(run("solve --instance /nonexistent.json"), 3);
}

TEST(cli, xcheck_passes_and_corruption_fails) {
    auto out = scratch("xcheck.json");
    ASSERT_EQ(run("xcheck --max-qubits 12 --out " + out.string()), 0);
    auto j = load(out);
    ASSERT_TRUE(j.at("pass").get<bool>());
    ASSERT_LE(j.at("max_tv").get<double>(), 1e-9);
    for (const auto &c : j.at("cases")) {
        ASSERT_TRUE(c.contains("max_tv"));
    }
    ASSERT_EQ(run("xcheck --max-qubits 12 --corrupt"), 2);
}

TEST(cli, validate_reports_bound_column) {
    auto out = scratch("validate.csv");
    ASSERT_EQ(run("validate --n 4 --trials 500 --pi-n 12 --pi-trials 300 --seed 9 --format csv --out " + out.string()), 0);
    std::string text = slurp(out);
    ASSERT_NE(text.find("lower_bound"), std::string::npos);
    ASSERT_NE(text.find("# seed: 9"), std::string::npos);
}

TEST(cli, bench_is_deterministic_and_nonadaptive_costs_more) {
    auto a = scratch("bench_a.json");
    auto b = scratch("bench_b.json");
    auto c = scratch("bench_c.json");
    std::string base = "bench --epsilon 0.5 --n-list 6,8 --trials 4 --seed 2 ";
    ASSERT_EQ(run(base + "--out " + a.string()), 0);
    ASSERT_EQ(run(base + "--threads 2 --out " + b.string()), 0);
    ASSERT_EQ(run(base + "--mode nonadaptive --out " + c.string()), 0);
    auto ja = load(a);
    auto jb = load(b);
    auto jc = load(c);
    for (size_t i = 0; i < 2; i++) {
        ASSERT_EQ(ja.at("table")[i].at("mean_copies"), jb.at("table")[i].at("mean_copies"));
        ASSERT_GT(jc.at("table")[i].at("mean_copies").get<double>(), ja.at("table")[i].at("mean_copies").get<double>());
    }
    ASSERT_TRUE(ja.at("fit").contains("a"));
}

TEST(cli, oracle_recovers_truth) {
    auto out = scratch("oracle.json");
    ASSERT_EQ(run("oracle --parts '0,3|1,2,4' --seed 4 --out " + out.string()), 0);
    ASSERT_TRUE(load(out).at("match").get<bool>());
}

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


#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hiddencut/bits.h"
#include "hiddencut/circuit.h"
#include "hiddencut/io.h"
#include "hiddencut/purity.h"
#include "hiddencut/solver.h"
#include "hiddencut/stats.h"
#include "hiddencut/wht.h"

using namespace hiddencut;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBreach = 2;
constexpr int kExitInvalid = 3;

struct CommonOptions {
    uint64_t seed = 1;
    std::string out;
    std::string format = "json";
    int threads = 1;
};

struct InstanceOptions {
    std::optional<int> n;
    std::string parts;
    std::string factors = "haar";
    std::optional<double> epsilon;
    std::string instance_path;
};

struct PolicyOptions {
    std::string mode = "nonadaptive";
    std::optional<int> t;
    std::optional<double> delta;
    std::string t_policy = "auto";
};

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        out.push_back(item);
    }
    return out;
}

int parse_int(const std::string &text) {
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw std::invalid_argument("not an integer: '" + text + "'");
    }
    return v;
}

double parse_double(const std::string &text) {
    size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw std::invalid_argument("not a number: '" + text + "'");
    }
    return v;
}

std::vector<int> parse_int_list(const std::string &text) {
    std::vector<int> out;
    for (const auto &item : split(text, ',')) {
        out.push_back(parse_int(item));
    }
    if (out.empty()) {
        throw std::invalid_argument("empty integer list");
    }
    return out;
}

/// "4,4" lists block sizes; "0,3|1,2" lists explicit qubit groups.
SetPartition parse_partition(const std::string &spec, std::optional<int> n) {
    if (spec.empty()) {
        throw std::invalid_argument("--parts is required");
    }
    SetPartition partition = SetPartition::single_part(1);
    if (spec.find('|') != std::string::npos) {
        std::vector<std::vector<int>> parts;
        int count = 0;
        for (const auto &group : split(spec, '|')) {
            parts.push_back(parse_int_list(group));
            count += static_cast<int>(parts.back().size());
        }
        partition = SetPartition::from_parts(n.value_or(count), std::move(parts));
    } else {
        partition = SetPartition::blocks(parse_int_list(spec));
    }
    if (n && *n != partition.num_qubits()) {
        throw std::invalid_argument("--n does not match the qubit count of --parts");
    }
    return partition;
}

/// "haar", "schmidt" (weight derived from --epsilon), or "schmidt:w1,w2,...".
FactorSpec parse_factors(const std::string &spec, std::optional<double> epsilon) {
    if (spec == "haar") {
        return HaarFactors{};
    }
    if (spec == "schmidt") {
        if (!epsilon) {
            throw std::invalid_argument("--factors schmidt needs --epsilon");
        }
        return SchmidtSpectrumFactors{{schmidt_weight_for_epsilon(*epsilon)}};
    }
    if (spec.rfind("schmidt:", 0) == 0) {
        SchmidtSpectrumFactors s;
        for (const auto &w : split(spec.substr(8), ',')) {
            s.weights.push_back(parse_double(w));
        }
        return s;
    }
    throw std::invalid_argument("unknown factor spec '" + spec + "' (haar, schmidt, schmidt:w1,...)");
}

TPolicy parse_policy(const PolicyOptions &opts, SolverMode mode) {
    if (opts.t && opts.delta) {
        throw std::invalid_argument("--t and --delta are mutually exclusive");
    }
    if (opts.t) {
        if (*opts.t < 1) {
            throw std::invalid_argument("--t must be positive");
        }
        return FixedT{*opts.t};
    }
    if (opts.delta) {
        return FromEpsilon{*opts.delta, std::nullopt};
    }
    if (opts.t_policy == "from-epsilon") {
        return FromEpsilon{};
    }
    if (opts.t_policy == "inverse-square") {
        return InverseSquareT{};
    }
    if (opts.t_policy == "auto") {
        if (mode == SolverMode::adaptive) {
            return InverseSquareT{};
        }
        return FromEpsilon{};
    }
    throw std::invalid_argument("unknown --t-policy '" + opts.t_policy + "'");
}

json load_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::exception &ex) {
        throw std::invalid_argument("'" + path + "' is not valid JSON: " + ex.what());
    }
}

PlantedInstance load_instance(const std::string &path) {
    json j = load_json_file(path);
    try {
        return decode_instance(j.contains("instance") ? j.at("instance") : j);
    } catch (const json::exception &ex) {
        throw std::invalid_argument("'" + path + "' is not an instance record: " + ex.what());
    }
}

PlantedInstance make_instance(const InstanceOptions &opts, Rng &rng) {
    if (!opts.instance_path.empty()) {
        return load_instance(opts.instance_path);
    }
    return plant_instance(parse_partition(opts.parts, opts.n), parse_factors(opts.factors, opts.epsilon), rng);
}

void check_format(const CommonOptions &common) {
    if (common.format != "json" && common.format != "csv") {
        throw std::invalid_argument("--format must be json or csv");
    }
    if (common.threads < 1) {
        throw std::invalid_argument("--threads must be positive");
    }
}

void emit(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << text;
}

std::string json_text(const json &j) {
    return j.dump(2) + "\n";
}

json instance_config(const InstanceOptions &opts) {
    json config = {{"factors", opts.factors}, {"epsilon", opts.epsilon ? json(*opts.epsilon) : json(nullptr)}};
    if (opts.instance_path.empty()) {
        config["parts"] = opts.parts;
        config["n"] = opts.n ? json(*opts.n) : json(nullptr);
    } else {
        config["instance"] = opts.instance_path;
    }
    return config;
}

/// Runs fn(0..count-1) on a worker pool. Results come back in index order.
template <typename T, typename F>
std::vector<T> parallel_map(size_t count, int threads, F fn) {
    std::vector<std::optional<T>> slots(count);
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            size_t i = next++;
            if (i >= count) {
                return;
            }
            try {
                slots[i].emplace(fn(i));
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next = count;
                return;
            }
        }
    };
    size_t workers = std::clamp<size_t>(threads, 1, std::max<size_t>(count, 1));
    std::vector<std::thread> pool;
    for (size_t w = 1; w < workers; w++) {
        pool.emplace_back(worker);
    }
    worker();
    for (auto &th : pool) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
    std::vector<T> out;
    out.reserve(count);
    for (auto &s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

SolverConfig solver_config(const PolicyOptions &policy, std::optional<double> epsilon) {
    SolverConfig cfg;
    cfg.mode = solver_mode_from_string(policy.mode);
    cfg.epsilon = epsilon;
    cfg.t_policy = parse_policy(policy, cfg.mode);
    return cfg;
}

void add_common(CLI::App *cmd, CommonOptions &common) {
    cmd->add_option("--seed", common.seed, "Master seed (echoed into every output)")->capture_default_str();
    cmd->add_option("--out", common.out, "Output path (default: stdout)");
    cmd->add_option("--format", common.format, "json or csv")->capture_default_str();
    cmd->add_option("--threads", common.threads, "Worker threads for trial-level parallelism")->capture_default_str();
}

void add_instance(CLI::App *cmd, InstanceOptions &inst) {
    cmd->add_option("--n", inst.n, "Qubit count (checked against --parts)");
    cmd->add_option("--parts", inst.parts, "Block sizes '4,4' or qubit groups '0,3|1,2'");
    cmd->add_option("--factors", inst.factors, "haar | schmidt | schmidt:w1,w2,...")->capture_default_str();
    cmd->add_option("--epsilon", inst.epsilon, "Promised epsilon gap");
    cmd->add_option("--instance", inst.instance_path, "Read a planted instance JSON instead of planting");
}

void add_policy(CLI::App *cmd, PolicyOptions &policy) {
    cmd->add_option("--mode", policy.mode, "nonadaptive | adaptive | haar_t2")->capture_default_str();
    cmd->add_option("--t", policy.t, "Fixed number of copies per Fourier sample");
    cmd->add_option("--delta", policy.delta, "Failure budget used to derive t from epsilon");
    cmd->add_option("--t-policy", policy.t_policy, "auto | from-epsilon | inverse-square")->capture_default_str();
}

int run_plant(const CommonOptions &common, const InstanceOptions &opts, const std::string &binary_path) {
    check_format(common);
    if (!opts.instance_path.empty()) {
        throw std::invalid_argument("plant does not read --instance");
    }
    Rng rng(common.seed);
    auto inst = make_instance(opts, rng);
    json config = instance_config(opts);
    config["command"] = "plant";
    json header = provenance_header(config, common.seed);
    if (common.format == "json") {
        emit(common.out, json_text({{"header", header}, {"instance", encode(inst)}}));
    } else {
        std::ostringstream out;
        write_csv_preamble(out, header);
        out << "# truth: " << inst.truth.to_string() << "\n";
        write_feature_csv(out, entanglement_feature(inst.state));
        emit(common.out, out.str());
    }
    if (!binary_path.empty()) {
        std::ofstream bin(binary_path, std::ios::binary);
        if (!bin) {
            throw std::runtime_error("cannot write '" + binary_path + "'");
        }
        write_state_binary(bin, inst.state);
    }
    return kExitOk;
}

struct TrialResult {
    SolveReport report;
    BatchRow row;
};

TrialResult run_trial(
    const InstanceOptions &opts, const SolverConfig &cfg, uint64_t seed, uint64_t trial,
    const std::optional<PlantedInstance> &fixed) {
    Rng rng = Rng(seed).split(trial);
    PlantedInstance inst = fixed ? *fixed : make_instance(opts, rng);
    auto report = solve(inst, cfg, rng);
    BatchRow row;
    row.trial = trial;
    row.seed = rng.seed();
    row.n = report.num_qubits;
    row.mode = to_string(report.mode);
    row.t = report.t;
    row.epsilon = report.epsilon.value_or(NAN);
    row.draws = report.draws;
    row.swap_tests = report.swap_tests;
    row.copies = report.copies_consumed;
    row.rank = report.rank_trace.empty() ? 0 : report.rank_trace.back();
    row.success = report.success.value_or(false);
    return TrialResult{std::move(report), row};
}

int run_solve(
    const CommonOptions &common, const InstanceOptions &opts, const PolicyOptions &policy, uint64_t trials,
    double min_success, const std::string &aggregate_path) {
    check_format(common);
    if (trials < 1) {
        throw std::invalid_argument("--trials must be positive");
    }
    if (!(min_success >= 0 && min_success <= 1)) {
        throw std::invalid_argument("--min-success must lie in [0, 1]");
    }
    SolverConfig cfg = solver_config(policy, opts.epsilon);
    std::optional<PlantedInstance> fixed;
    if (!opts.instance_path.empty()) {
        fixed = load_instance(opts.instance_path);
    } else {
        parse_partition(opts.parts, opts.n);
        parse_factors(opts.factors, opts.epsilon);
    }
    auto results = parallel_map<TrialResult>(trials, common.threads, [&](size_t trial) {
        return run_trial(opts, cfg, common.seed, trial, fixed);
    });

    uint64_t successes = 0;
    double copies = 0;
    for (const auto &r : results) {
        successes += r.row.success;
        copies += static_cast<double>(r.row.copies);
    }
    double rate = static_cast<double>(successes) / static_cast<double>(trials);
    json config = instance_config(opts);
    config.update({{"command", "solve"}, {"mode", policy.mode}, {"trials", trials}, {"min_success", min_success},
                   {"t", policy.t ? json(*policy.t) : json(nullptr)},
                   {"delta", policy.delta ? json(*policy.delta) : json(nullptr)}, {"t_policy", policy.t_policy}});
    json header = provenance_header(config, common.seed);

    std::ostringstream csv;
    write_csv_preamble(csv, header);
    write_batch_csv_header(csv);
    for (const auto &r : results) {
        write_batch_csv_row(csv, r.row);
    }
    if (common.format == "json") {
        json reports = json::array();
        for (const auto &r : results) {
            reports.push_back({{"trial", r.row.trial}, {"seed", r.row.seed}, {"report", encode(r.report)}});
        }
        json summary = {{"trials", trials}, {"successes", successes}, {"failures", trials - successes},
                        {"success_rate", rate}, {"mean_copies", copies / static_cast<double>(trials)}};
        emit(common.out, json_text({{"header", header}, {"summary", summary}, {"reports", reports}}));
    } else {
        emit(common.out, csv.str());
    }
    if (!aggregate_path.empty()) {
        emit(aggregate_path, csv.str());
    }
    std::cerr << "solve: " << successes << "/" << trials << " recovered\n";
    return rate < min_success ? kExitBreach : kExitOk;
}

struct XcheckCase {
    int n = 0;
    int t = 0;
    double max_tv = 0;
    bool integrity_failure = false;
};

int run_xcheck(const CommonOptions &common, int max_qubits, int states, bool corrupt, double tolerance) {
    check_format(common);
    if (states < 1 || max_qubits < 3 || max_qubits > 26) {
        throw std::invalid_argument("xcheck: need --trials >= 1 and --max-qubits in [3, 26]");
    }
    std::vector<std::pair<int, int>> grid;
    for (int n = 1; n * 3 <= max_qubits; n++) {
        for (int t = 2; n * (1 + t) <= max_qubits; t += 2) {
            grid.emplace_back(n, t);
        }
    }
    CircuitLimits limits{max_qubits};
    auto cases = parallel_map<XcheckCase>(grid.size(), common.threads, [&](size_t i) {
        auto [n, t] = grid[i];
        Rng rng = Rng(common.seed).split(i);
        XcheckCase c{n, t, 0, false};
        for (int s = 0; s < states; s++) {
            auto state = haar_random_state(n, rng);
            auto circuit = simulate_fourier_sampling_circuit(state, t, limits);
            auto feature = entanglement_feature(state);
            if (corrupt) {
                // Perturb a complementary mask pair so the law stays symmetric but wrong.
                uint64_t complement = low_mask(n) ^ 1;
                feature.values[1] *= 0.999;
                if (complement != 0) {
                    feature.values[complement] *= 0.999;
                }
            }
            try {
                auto analytic = statehsp_distribution(feature, t);
                c.max_tv = std::max(c.max_tv, total_variation(circuit.probs, analytic.probs));
            } catch (const std::runtime_error &) {
                c.integrity_failure = true;
                c.max_tv = 1.0;
            }
        }
        return c;
    });

    bool ok = true;
    double worst = 0;
    for (const auto &c : cases) {
        ok = ok && !c.integrity_failure && c.max_tv <= tolerance;
        worst = std::max(worst, c.max_tv);
    }
    json config = {{"command", "xcheck"}, {"max_qubits", max_qubits}, {"states_per_case", states},
                   {"corrupt", corrupt}, {"tolerance", tolerance}};
    json header = provenance_header(config, common.seed);
    if (common.format == "json") {
        json rows = json::array();
        for (const auto &c : cases) {
            rows.push_back({{"n", c.n}, {"t", c.t}, {"max_tv", c.max_tv}, {"integrity_failure", c.integrity_failure},
                            {"pass", !c.integrity_failure && c.max_tv <= tolerance}});
        }
        emit(common.out, json_text({{"header", header}, {"cases", rows}, {"max_tv", worst}, {"pass", ok}}));
    } else {
        std::ostringstream out;
        write_csv_preamble(out, header);
        out << "n,t,max_tv,integrity_failure,pass\n";
        out.precision(6);
        for (const auto &c : cases) {
            out << c.n << "," << c.t << "," << c.max_tv << "," << c.integrity_failure << ","
                << (!c.integrity_failure && c.max_tv <= tolerance) << "\n";
        }
        emit(common.out, out.str());
    }
    std::cerr << "xcheck: " << cases.size() << " cases, max TV " << worst << (ok ? " (pass)\n" : " (FAIL)\n");
    return ok ? kExitOk : kExitBreach;
}

int run_validate(
    const CommonOptions &common, int n, uint64_t trials, double sigma, const std::string &pi_n_list,
    uint64_t pi_trials) {
    check_format(common);
    if (n < 2 || n > 10 || trials < 2 || !(sigma > 0)) {
        throw std::invalid_argument("validate: need --n in [2, 10], --trials >= 2 and --sigma > 0");
    }
    std::vector<int> pi_ns = pi_n_list.empty() ? std::vector<int>{} : parse_int_list(pi_n_list);
    for (int m : pi_ns) {
        if (m < 4 || m > 62) {
            throw std::invalid_argument("validate: --pi-n entries must lie in [4, 62]");
        }
    }
    Rng root(common.seed);
    Rng moment_rng = root.split(0);
    auto moments = monte_carlo_haar_moments(n, trials, moment_rng);
    auto pis = parallel_map<PiEstimate>(pi_ns.size(), common.threads, [&](size_t i) {
        int m = pi_ns[i];
        std::vector<int> sizes = {m / 2, m - m / 2};
        Rng rng = root.split(1 + i);
        return monte_carlo_pi(m - 3, pi_trials, SetPartition::blocks(sizes), rng);
    });

    std::vector<std::string> breaches;
    if (moments.max_abs_purity_z > sigma) {
        breaches.push_back("purity z-score above threshold");
    }
    if (moments.max_abs_fourier_z > sigma) {
        breaches.push_back("Fourier z-score above threshold");
    }
    for (const auto &p : pis) {
        if (p.wilson.hi < p.lower_bound) {
            breaches.push_back("independence probability below analytic bound at n=" + std::to_string(p.n));
        }
    }
    json config = {{"command", "validate"}, {"n", n}, {"trials", trials}, {"sigma", sigma},
                   {"pi_n", pi_ns}, {"pi_trials", pi_trials}};
    json header = provenance_header(config, common.seed);
    if (common.format == "json") {
        json pi_rows = json::array();
        for (const auto &p : pis) {
            pi_rows.push_back(encode(p));
        }
        emit(common.out, json_text({{"header", header}, {"moments", encode(moments)}, {"pi", pi_rows},
                                    {"breaches", breaches}, {"pass", breaches.empty()}}));
    } else {
        std::ostringstream out;
        write_csv_preamble(out, header);
        write_moment_csv(out, moments);
        out << "\npi_n,k,trials,independent,estimate,wilson_lo,wilson_hi,lower_bound\n";
        for (const auto &p : pis) {
            out << p.n << "," << p.k << "," << p.trials << "," << p.independent << "," << p.estimate << ","
                << p.wilson.lo << "," << p.wilson.hi << "," << p.lower_bound << "\n";
        }
        emit(common.out, out.str());
    }
    for (const auto &b : breaches) {
        std::cerr << "validate: breach: " << b << "\n";
    }
    return breaches.empty() ? kExitOk : kExitBreach;
}

struct BenchRow {
    int n = 0;
    int t = 0;
    double mean_copies = 0;
    double sd_copies = 0;
    double success_rate = 0;
    double mean_ms = 0;
};

int run_bench(
    const CommonOptions &common, const InstanceOptions &opts, const PolicyOptions &policy, const std::string &n_list,
    uint64_t trials) {
    check_format(common);
    if (!opts.epsilon) {
        throw std::invalid_argument("bench needs --epsilon");
    }
    if (trials < 1) {
        throw std::invalid_argument("--trials must be positive");
    }
    double eps = *opts.epsilon;
    SolverConfig cfg = solver_config(policy, eps);
    auto ns = parse_int_list(n_list);
    FactorSpec factors = parse_factors(opts.factors, eps);

    std::vector<BenchRow> rows;
    for (size_t i = 0; i < ns.size(); i++) {
        int n = ns[i];
        std::vector<int> sizes = {n / 2, n - n / 2};
        auto partition = SetPartition::blocks(sizes);
        struct Sample {
            double copies;
            double ms;
            bool success;
            int t;
        };
        auto samples = parallel_map<Sample>(trials, common.threads, [&](size_t trial) {
            Rng rng = Rng(common.seed).split(i).split(trial);
            auto inst = plant_instance(partition, factors, rng);
            auto start = std::chrono::steady_clock::now();
            auto report = solve(inst, cfg, rng);
            return Sample{static_cast<double>(report.copies_consumed), elapsed_ms(start),
                          report.success.value_or(false), report.t};
        });
        std::vector<double> copies;
        BenchRow row{n, samples.front().t, 0, 0, 0, 0};
        for (const auto &s : samples) {
            copies.push_back(s.copies);
            row.success_rate += s.success;
            row.mean_ms += s.ms;
        }
        row.mean_copies = mean(copies);
        row.sd_copies = trials > 1 ? std::sqrt(sample_variance(copies)) : 0.0;
        row.success_rate /= static_cast<double>(trials);
        row.mean_ms /= static_cast<double>(trials);
        rows.push_back(row);
    }

    // copies ~ a * n / eps^2: least squares through the origin, plus an affine fit.
    std::vector<double> x;
    std::vector<double> y;
    double sxy = 0;
    double sxx = 0;
    for (const auto &r : rows) {
        x.push_back(r.n / (eps * eps));
        y.push_back(r.mean_copies);
        sxy += x.back() * y.back();
        sxx += x.back() * x.back();
    }
    double a = sxy / sxx;
    std::optional<LinearFit> fit;
    if (rows.size() >= 2) {
        fit = fit_line(x, y);
    }

    json config = {{"command", "bench"}, {"mode", policy.mode}, {"factors", opts.factors}, {"epsilon", eps},
                   {"n_list", ns}, {"trials", trials}, {"t_policy", policy.t_policy}};
    json header = provenance_header(config, common.seed);
    if (common.format == "json") {
        json table = json::array();
        for (const auto &r : rows) {
            table.push_back({{"n", r.n}, {"t", r.t}, {"mean_copies", r.mean_copies}, {"sd_copies", r.sd_copies},
                             {"success_rate", r.success_rate}, {"mean_wall_ms", r.mean_ms}});
        }
        json fit_json = {{"a", a}};
        if (fit) {
            fit_json.update({{"slope", fit->slope}, {"intercept", fit->intercept}, {"r_squared", fit->r_squared}});
        }
        emit(common.out, json_text({{"header", header}, {"table", table}, {"fit", fit_json}}));
    } else {
        std::ostringstream out;
        write_csv_preamble(out, header);
        out << "# fit_a: " << a << "\n";
        if (fit) {
            out << "# fit_slope: " << fit->slope << "\n# fit_intercept: " << fit->intercept
                << "\n# fit_r_squared: " << fit->r_squared << "\n";
        }
        out << "n,t,mean_copies,sd_copies,success_rate,mean_wall_ms\n";
        for (const auto &r : rows) {
            out << r.n << "," << r.t << "," << r.mean_copies << "," << r.sd_copies << "," << r.success_rate << ","
                << r.mean_ms << "\n";
        }
        emit(common.out, out.str());
    }
    return kExitOk;
}

int run_oracle(const CommonOptions &common, const InstanceOptions &opts) {
    check_format(common);
    Rng rng(common.seed);
    auto inst = make_instance(opts, rng);
    auto found = brute_force_cut_search(inst.state);
    bool match = found == inst.truth;
    json config = instance_config(opts);
    config["command"] = "oracle";
    json header = provenance_header(config, common.seed);
    if (common.format == "json") {
        emit(common.out, json_text({{"header", header}, {"found", encode(found)}, {"truth", encode(inst.truth)},
                                    {"match", match}}));
    } else {
        std::ostringstream out;
        write_csv_preamble(out, header);
        out << "found,truth,match\n" << found.to_string() << "," << inst.truth.to_string() << "," << match << "\n";
        emit(common.out, out.str());
    }
    return match ? kExitOk : kExitBreach;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"hiddencut: planted product-state cut recovery experiments"};
    app.set_version_flag("--version", library_version());
    app.require_subcommand(1);

    CommonOptions common;
    InstanceOptions inst;
    PolicyOptions policy;

    auto *plant = app.add_subcommand("plant", "Plant a product state and write the instance");
    add_common(plant, common);
    add_instance(plant, inst);
    std::string binary_path;
    plant->add_option("--binary", binary_path, "Also write the statevector in binary form");

    auto *solve_cmd = app.add_subcommand("solve", "Run a solver over independent trials");
    add_common(solve_cmd, common);
    add_instance(solve_cmd, inst);
    add_policy(solve_cmd, policy);
    uint64_t trials = 1;
    double min_success = 0;
    std::string aggregate_path;
    solve_cmd->add_option("--trials", trials, "Number of trials")->capture_default_str();
    solve_cmd->add_option("--min-success", min_success, "Exit 2 when the success rate falls below this")
        ->capture_default_str();
    solve_cmd->add_option("--aggregate", aggregate_path, "Also write the per-trial aggregate CSV here");

    auto *xcheck = app.add_subcommand("xcheck", "Compare the circuit simulation with the analytic law");
    add_common(xcheck, common);
    int max_qubits = 18;
    int states = 2;
    bool corrupt = false;
    double tolerance = 1e-9;
    xcheck->add_option("--max-qubits", max_qubits, "Largest simulated register n(1+t)")->capture_default_str();
    xcheck->add_option("--trials", states, "Random states per grid point")->capture_default_str();
    xcheck->add_option("--tolerance", tolerance, "Largest accepted total variation")->capture_default_str();
    xcheck->add_flag("--corrupt", corrupt, "Inject a purity error (self-test: must fail)");

    auto *validate = app.add_subcommand("validate", "Check Haar moment and independence statistics");
    add_common(validate, common);
    int validate_n = 6;
    uint64_t validate_trials = 2000;
    double sigma = 4;
    std::string pi_n_list = "12,16";
    uint64_t pi_trials = 2000;
    validate->add_option("--n", validate_n, "Qubits for the moment checks")->capture_default_str();
    validate->add_option("--trials", validate_trials, "Haar states for the moment checks")->capture_default_str();
    validate->add_option("--sigma", sigma, "z-score threshold")->capture_default_str();
    validate->add_option("--pi-n", pi_n_list, "Qubit counts for the independence table")->capture_default_str();
    validate->add_option("--pi-trials", pi_trials, "Trials per independence row")->capture_default_str();

    auto *bench = app.add_subcommand("bench", "Sweep n and fit copies against n / epsilon^2");
    add_common(bench, common);
    add_policy(bench, policy);
    bench->add_option("--factors", inst.factors, "haar | schmidt | schmidt:w1,w2,...")->capture_default_str();
    bench->add_option("--epsilon", inst.epsilon, "Promised epsilon gap")->required();
    std::string n_list = "6,8,10,12";
    uint64_t bench_trials = 10;
    bench->add_option("--n-list", n_list, "Qubit counts to sweep")->capture_default_str();
    bench->add_option("--trials", bench_trials, "Trials per n")->capture_default_str();

    auto *oracle = app.add_subcommand("oracle", "Brute-force cut search on a planted instance");
    add_common(oracle, common);
    add_instance(oracle, inst);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (plant->parsed()) {
            return run_plant(common, inst, binary_path);
        }
        if (solve_cmd->parsed()) {
            return run_solve(common, inst, policy, trials, min_success, aggregate_path);
        }
        if (xcheck->parsed()) {
            return run_xcheck(common, max_qubits, states, corrupt, tolerance);
        }
        if (validate->parsed()) {
            return run_validate(common, validate_n, validate_trials, sigma, pi_n_list, pi_trials);
        }
        if (bench->parsed()) {
            if (!bench->count("--factors")) {
                inst.factors = "schmidt";
            }
            if (!bench->count("--mode")) {
                policy.mode = "adaptive";
            }
            return run_bench(common, inst, policy, n_list, bench_trials);
        }
        if (oracle->parsed()) {
            return run_oracle(common, inst);
        }
    } catch (const std::invalid_argument &ex) {
        std::cerr << "invalid configuration: " << ex.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception &ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitError;
    }
    return kExitInvalid;
}

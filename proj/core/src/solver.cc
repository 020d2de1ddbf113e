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


#include "hiddencut/solver.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "hiddencut/bits.h"
#include "hiddencut/purity.h"
#include "hiddencut/swaptest.h"
#include "hiddencut/wht.h"

namespace hiddencut {

namespace {

double resolve_epsilon_or_throw(const SolverConfig &cfg, const PlantedInstance &instance) {
    auto eps = cfg.epsilon ? cfg.epsilon : instance.epsilon_certified;
    if (!eps) {
        throw std::invalid_argument("epsilon is required: pass one or plant a certified instance");
    }
    if (!(*eps > 0 && *eps <= 1)) {
        throw std::invalid_argument("epsilon must lie in (0, 1]");
    }
    return *eps;
}

SolveReport start_report(const PlantedInstance &instance, const SolverConfig &cfg, SolverMode mode) {
    SolveReport report;
    report.mode = mode;
    report.num_qubits = instance.state.num_qubits();
    report.epsilon = cfg.epsilon ? cfg.epsilon : instance.epsilon_certified;
    return report;
}

void finish_report(SolveReport &report, const PlantedInstance &instance) {
    report.copies_consumed = report.draws * static_cast<uint64_t>(report.t) + 2 * report.swap_tests;
    report.success = report.recovered.has_value() && *report.recovered == instance.truth;
}

void recover_from_samples(SolveReport &report, const GF2Subspace &span) {
    int n = report.num_qubits;
    report.inferred_parts = n - span.dim();
    try {
        report.recovered = partition_from_nullspace(orthogonal_complement(span), n);
    } catch (const std::exception &ex) {
        report.failure_reason = ex.what();
    }
}

}  // namespace

std::string to_string(SolverMode mode) {
    switch (mode) {
        case SolverMode::nonadaptive:
            return "nonadaptive";
        case SolverMode::adaptive:
            return "adaptive";
        case SolverMode::haar_t2:
            return "haar_t2";
    }
    return "unknown";
}

SolverMode solver_mode_from_string(const std::string &text) {
    if (text == "nonadaptive") {
        return SolverMode::nonadaptive;
    }
    if (text == "adaptive") {
        return SolverMode::adaptive;
    }
    if (text == "haar_t2") {
        return SolverMode::haar_t2;
    }
    throw std::invalid_argument("unknown solver mode '" + text + "'");
}

int choose_t(double epsilon, int n, int max_part, double delta) {
    if (!(epsilon > 0 && epsilon <= 1)) {
        throw std::invalid_argument("choose_t: epsilon must lie in (0, 1]");
    }
    if (!(delta > 0 && delta < 1)) {
        throw std::invalid_argument("choose_t: delta must lie in (0, 1)");
    }
    if (max_part < 1 || max_part > n) {
        throw std::invalid_argument("choose_t: max_part must lie in [1, n]");
    }
    double log_decay = std::log1p(-epsilon * epsilon);
    auto ok = [&](int t) {
        return max_part * std::log(2.0) + (t / 2) * log_decay <= std::log(delta);
    };
    if (ok(2)) {
        return 2;
    }
    int t = 2 * static_cast<int>(std::ceil((max_part * std::log(2.0) - std::log(delta)) / -log_decay));
    t = std::max(t, 2);
    while (t > 2 && ok(t - 2)) {
        t -= 2;
    }
    while (!ok(t)) {
        t += 2;
    }
    return t;
}

int inverse_square_t(double epsilon) {
    if (!(epsilon > 0 && epsilon <= 1)) {
        throw std::invalid_argument("inverse_square_t: epsilon must lie in (0, 1]");
    }
    double half = 1.0 / (epsilon * epsilon);
    int j = static_cast<int>(std::ceil(half * (1 - 1e-12)));
    return 2 * std::max(j, 1);
}

int resolve_t(const SolverConfig &cfg, const PlantedInstance &instance) {
    if (const auto *fixed = std::get_if<FixedT>(&cfg.t_policy)) {
        if (fixed->t < 1) {
            throw std::invalid_argument("t must be positive");
        }
        return fixed->t + (fixed->t % 2);
    }
    double eps = resolve_epsilon_or_throw(cfg, instance);
    if (std::holds_alternative<InverseSquareT>(cfg.t_policy)) {
        return inverse_square_t(eps);
    }
    const auto &from = std::get<FromEpsilon>(cfg.t_policy);
    int max_part = from.max_part.value_or(instance.truth.max_part_size());
    return choose_t(eps, instance.state.num_qubits(), max_part, from.delta);
}

SetPartition partition_from_nullspace(const GF2Subspace &ns, int n) {
    if (ns.ambient_dim() != n) {
        throw std::invalid_argument("partition_from_nullspace: dimension mismatch");
    }
    GF2Vector ones(n);
    for (int i = 0; i < n; i++) {
        ones.set(i, true);
    }
    if (!membership(ns, ones)) {
        throw InconsistentNullspace("nullspace does not contain the all-ones vector (corrupted samples?)");
    }
    std::map<std::vector<bool>, std::vector<int>> classes;
    for (int q = 0; q < n; q++) {
        std::vector<bool> column;
        for (const auto &b : ns.basis()) {
            column.push_back(b.get(q));
        }
        classes[column].push_back(q);
    }
    std::vector<std::vector<int>> parts;
    std::vector<GF2Vector> indicators;
    for (auto &[_, qubits] : classes) {
        GF2Vector v(n);
        for (int q : qubits) {
            v.set(q, true);
        }
        indicators.push_back(std::move(v));
        parts.push_back(std::move(qubits));
    }
    if (!(GF2Subspace::span(n, indicators) == ns)) {
        std::ostringstream msg;
        msg << "nullspace of dimension " << ns.dim() << " is not spanned by the indicators of its "
            << parts.size() << " column classes";
        throw InconsistentNullspace(msg.str());
    }
    return SetPartition::from_parts(n, std::move(parts));
}

int infer_num_parts(const GF2Matrix &samples, int n) {
    return n - rank(samples);
}

SolveReport solve_nonadaptive(const PlantedInstance &instance, const SolverConfig &cfg, Rng &rng) {
    SolveReport report = start_report(instance, cfg, SolverMode::nonadaptive);
    int n = report.num_qubits;
    report.t = resolve_t(cfg, instance);
    if (cfg.patience < 1) {
        throw std::invalid_argument("patience must be positive");
    }
    auto dist = statehsp_distribution(entanglement_feature(instance.state), report.t);
    DistributionSampler sampler(dist);

    GF2Subspace span(n);
    int stable = 0;
    bool plateau = false;
    while (report.draws < cfg.max_samples) {
        uint64_t y = sampler.draw(rng);
        report.draws++;
        report.samples.push_back(y);
        report.kept.push_back(true);
        stable = span.insert(GF2Vector::from_word(n, y)) ? 0 : stable + 1;
        report.rank_trace.push_back(span.dim());
        if (stable >= cfg.patience) {
            plateau = true;
            break;
        }
    }
    report.rounds = static_cast<int>(report.draws);
    if (plateau) {
        recover_from_samples(report, span);
    } else {
        report.inferred_parts = n - span.dim();
        report.failure_reason = "max_samples exhausted before the rank plateaued";
    }
    finish_report(report, instance);
    return report;
}

SolveReport solve_adaptive(const PlantedInstance &instance, const SolverConfig &cfg, Rng &rng) {
    SolveReport report = start_report(instance, cfg, SolverMode::adaptive);
    int n = report.num_qubits;
    report.t = resolve_t(cfg, instance);
    double eps = resolve_epsilon_or_throw(cfg, instance);
    double floor = 0.5 * (1.0 - std::pow(1.0 - eps * eps, report.t / 2));
    auto reject_budget = static_cast<uint64_t>(std::ceil(8.0 / floor));
    auto feature = entanglement_feature(instance.state);

    GF2Subspace span(n);
    bool plateau = false;
    while (span.dim() < n && report.draws < cfg.max_samples) {
        auto dist = adaptive_distribution(feature, report.t, orthogonal_complement(span));
        DistributionSampler sampler(dist);
        RoundStats round{report.rounds + 1, span.dim(), 0, false};
        uint64_t rejections = 0;
        while (report.draws < cfg.max_samples) {
            uint64_t y = sampler.draw(rng);
            report.draws++;
            round.draws++;
            report.samples.push_back(y);
            auto v = GF2Vector::from_word(n, y);
            bool keep = y != 0 && !membership(span, v);
            report.kept.push_back(keep);
            if (keep) {
                span.insert(v);
            }
            report.rank_trace.push_back(span.dim());
            if (keep) {
                round.accepted = true;
                break;
            }
            if (++rejections >= reject_budget) {
                plateau = true;
                break;
            }
        }
        report.round_stats.push_back(round);
        report.rounds++;
        if (!round.accepted) {
            break;
        }
    }
    if (plateau || span.dim() == n) {
        recover_from_samples(report, span);
    } else {
        report.inferred_parts = n - span.dim();
        report.failure_reason = "max_samples exhausted before the rank plateaued";
    }
    finish_report(report, instance);
    return report;
}

SolveReport solve_haar_t2(const PlantedInstance &instance, const SolverConfig &cfg, Rng &rng) {
    SolveReport report = start_report(instance, cfg, SolverMode::haar_t2);
    int n = report.num_qubits;
    report.t = 2;
    int k = cfg.direct_n_minus_2 ? n - 2 : n - 3;
    if (k < 1) {
        throw std::invalid_argument("haar_t2: need at least 4 qubits");
    }
    if (cfg.max_batches < 1) {
        throw std::invalid_argument("max_batches must be positive");
    }
    uint64_t full = low_mask(n);
    auto dist = statehsp_distribution(entanglement_feature(instance.state), 2);
    DistributionSampler sampler(dist);

    std::optional<GF2Subspace> independent_span;
    GF2Subspace span(n);
    for (int batch = 0; batch < cfg.max_batches && !independent_span; batch++) {
        report.batches++;
        span = GF2Subspace(n);
        for (int i = 0; i < k; i++) {
            uint64_t y = sampler.draw(rng);
            report.draws++;
            report.samples.push_back(y);
            report.kept.push_back(true);
            span.insert(GF2Vector::from_word(n, y));
            report.rank_trace.push_back(span.dim());
        }
        if (span.dim() == k) {
            independent_span = span;
        }
    }
    report.rounds = report.batches;
    report.inferred_parts = n - span.dim();
    if (!independent_span) {
        report.failure_reason = "no linearly independent batch within max_batches";
        finish_report(report, instance);
        return report;
    }
    if (cfg.direct_n_minus_2) {
        recover_from_samples(report, *independent_span);
        finish_report(report, instance);
        return report;
    }

    bool truth_is_cut = instance.truth.num_parts() == 2;
    std::vector<uint64_t> candidates;
    for (uint64_t c : enumerate_words(orthogonal_complement(*independent_span))) {
        if (c != 0 && c != full) {
            candidates.push_back(c);
        }
    }
    // Union bound: the whole candidate list is verified at cfg.confidence.
    double per_candidate = 1.0 - (1.0 - cfg.confidence) / static_cast<double>(candidates.size());
    std::vector<uint64_t> accepted_cuts;
    for (uint64_t c : candidates) {
        auto outcome = verify_candidate_cut(instance.state, CutMask(n, c), per_candidate, report.epsilon, rng);
        report.swap_tests += outcome.copies_used / 2;
        CandidateCheck check{c, outcome.accepted, outcome.copies_used, outcome.acceptance_prob_exact, std::nullopt};
        if (truth_is_cut) {
            check.is_true_cut = c == instance.truth.part_mask(0) || c == instance.truth.part_mask(1);
        }
        report.candidates.push_back(check);
        // A cut and its complement name the same bipartition; key by the side holding qubit 0.
        uint64_t key = (c & 1) ? c : (c ^ full);
        if (outcome.accepted && std::find(accepted_cuts.begin(), accepted_cuts.end(), key) == accepted_cuts.end()) {
            accepted_cuts.push_back(key);
        }
    }
    if (accepted_cuts.size() == 1) {
        std::vector<std::vector<int>> parts(2);
        for (int q = 0; q < n; q++) {
            parts[((accepted_cuts[0] >> q) & 1) ? 0 : 1].push_back(q);
        }
        report.recovered = SetPartition::from_parts(n, std::move(parts));
        report.inferred_parts = 2;
    } else if (accepted_cuts.empty()) {
        report.failure_reason = "no candidate cut passed verification";
    } else {
        report.failure_reason = "verification accepted more than one distinct cut";
    }
    finish_report(report, instance);
    return report;
}

SolveReport solve(const PlantedInstance &instance, const SolverConfig &cfg, Rng &rng) {
    switch (cfg.mode) {
        case SolverMode::nonadaptive:
            return solve_nonadaptive(instance, cfg, rng);
        case SolverMode::adaptive:
            return solve_adaptive(instance, cfg, rng);
        case SolverMode::haar_t2:
            return solve_haar_t2(instance, cfg, rng);
    }
    throw std::invalid_argument("unknown solver mode");
}

}  // namespace hiddencut

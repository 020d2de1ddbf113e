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


#ifndef HIDDENCUT_SOLVER_H
#define HIDDENCUT_SOLVER_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hiddencut/gf2.h"
#include "hiddencut/rng.h"
#include "hiddencut/statevec.h"

namespace hiddencut {

enum class SolverMode { nonadaptive, adaptive, haar_t2 };

std::string to_string(SolverMode mode);
SolverMode solver_mode_from_string(const std::string &text);

/// Use exactly t copies per draw (odd values are rounded up).
struct FixedT {
    int t = 2;
};
/// Pick t with choose_t at failure target `delta`. When `max_part` is unset the
/// largest part of the instance's truth is used.
struct FromEpsilon {
    double delta = 1e-6;
    std::optional<int> max_part;
};
/// Smallest even t >= 2 / epsilon^2.
struct InverseSquareT {};
using TPolicy = std::variant<FixedT, FromEpsilon, InverseSquareT>;

struct SolverConfig {
    SolverMode mode = SolverMode::nonadaptive;
    /// Promise parameter; defaults to the instance certificate.
    std::optional<double> epsilon;
    TPolicy t_policy = FromEpsilon{};
    /// Budget on distribution draws.
    uint64_t max_samples = 100000;
    /// Nonadaptive: consecutive draws without rank growth before stopping.
    int patience = 8;
    /// Haar two-copy route: confidence of the whole candidate verification
    /// (split evenly over the candidates by a union bound).
    double confidence = 0.99;
    /// Haar two-copy route: batches drawn before giving up on independence.
    int max_batches = 32;
    /// Haar two-copy route: draw n-2 samples and skip SWAP verification.
    bool direct_n_minus_2 = false;
};

struct CandidateCheck {
    uint64_t mask = 0;
    bool accepted = false;
    uint64_t copies = 0;
    double acceptance_prob_exact = 0;
    /// Whether the mask is one of the planted cut strings (when truth is known).
    std::optional<bool> is_true_cut;
};

struct RoundStats {
    int round = 0;
    /// Dimension of the accepted-sample span entering the round.
    int span_dim = 0;
    uint64_t draws = 0;
    bool accepted = false;
};

struct SolveReport {
    SolverMode mode = SolverMode::nonadaptive;
    int num_qubits = 0;
    int t = 0;
    std::optional<double> epsilon;
    std::optional<SetPartition> recovered;
    /// Every distribution draw, in order (rejected adaptive draws included).
    std::vector<uint64_t> samples;
    /// Per draw: kept by the algorithm (nonadaptive keeps all draws).
    std::vector<bool> kept;
    /// Rank of the kept samples after each draw.
    std::vector<int> rank_trace;
    uint64_t draws = 0;
    uint64_t swap_tests = 0;
    uint64_t copies_consumed = 0;
    int rounds = 0;
    int batches = 0;
    int inferred_parts = 0;
    std::optional<bool> success;
    std::string failure_reason;
    std::vector<RoundStats> round_stats;
    std::vector<CandidateCheck> candidates;
};

/// Raised by partition_from_nullspace on sample sets no partition explains.
class InconsistentNullspace : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Smallest even t with 2^max_part (1 - epsilon^2)^(t/2) <= delta.
int choose_t(double epsilon, int n, int max_part, double delta);

/// Smallest even t >= 2 / epsilon^2.
int inverse_square_t(double epsilon);

/// Resolves the t policy of `cfg` against an instance.
int resolve_t(const SolverConfig &cfg, const PlantedInstance &instance);

/// Qubits i, j share a part iff they agree on every vector of `ns`.
SetPartition partition_from_nullspace(const GF2Subspace &ns, int n);

/// n - rank(samples).
int infer_num_parts(const GF2Matrix &samples, int n);

SolveReport solve_nonadaptive(const PlantedInstance &instance, const SolverConfig &cfg, Rng &rng);
SolveReport solve_adaptive(const PlantedInstance &instance, const SolverConfig &cfg, Rng &rng);
SolveReport solve_haar_t2(const PlantedInstance &instance, const SolverConfig &cfg, Rng &rng);
/// Dispatches on cfg.mode.
SolveReport solve(const PlantedInstance &instance, const SolverConfig &cfg, Rng &rng);

}  // namespace hiddencut

#endif

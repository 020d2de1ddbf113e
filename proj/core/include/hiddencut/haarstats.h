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


#ifndef HIDDENCUT_HAARSTATS_H
#define HIDDENCUT_HAARSTATS_H

#include <cstdint>
#include <utility>
#include <vector>

#include "hiddencut/rng.h"
#include "hiddencut/stats.h"
#include "hiddencut/statevec.h"

namespace hiddencut {

// Closed-form Haar moments. N = 2^n throughout.

/// E[Tr psi_x^2] for |x| = weight: (2^-k + 2^(k-n)) / (1 + 2^-n).
double mean_purity(int n, int weight);

/// Cov[Tr psi_x^2, Tr psi_x2^2] with d = |x XOR x2|:
/// 2(2^d + 2^(n-d)) / ((N+1)(N+2)(N+3)) - 2/((N+2)(N+3)) * p_x * p_x2.
double purity_covariance(int n, uint64_t x, uint64_t x2);
double purity_covariance(const CutMask &x, const CutMask &x2);

/// E[P(y)] of two-copy Fourier sampling: 2 * 3^(n-|y|) / (N (N+1)) for even |y|, else 0.
double fourier_mean(int n, uint64_t y);

/// Var[P(y)] of two-copy Fourier sampling, w = |y| even:
/// 2^(2-2n) 3^(n-2w) (N(N+1) 3^w - 2 * 3^n) / ((N+1)^2 (N+2)(N+3)); odd w gives 0.
double fourier_variance(int n, uint64_t y);

/// 4 ((2 + 2^-p) / 4)^n.
double q_p(int n, int p);

/// 1 - sum_{p=0}^{k-1} C(k, p+1) q_p(n, p), clamped to [0, 1].
double pi_lower_bound(int n, int k);

/// Unclamped value of the same sum (negative when the bound is vacuous).
double pi_lower_bound_raw(int n, int k);

/// Two-copy Haar outcome law for a two-part cut: P(y) proportional to
/// 3^-|y| on the cut subspace, zero elsewhere. Indexed by y < 2^n.
std::vector<double> rejection_law(const SetPartition &cut);

/// Draws i.i.d. Bernoulli(1/4) bits until the word has even weight on every part.
uint64_t bernoulli_rejection_sampler(const SetPartition &cut, Rng &rng);

struct PiEstimate {
    int n = 0;
    int k = 0;
    uint64_t trials = 0;
    uint64_t independent = 0;
    double estimate = 0;
    Interval wilson;
    double lower_bound = 0;
};

/// Fraction of trials in which k sampler draws are linearly independent.
PiEstimate monte_carlo_pi(int k, uint64_t trials, const SetPartition &cut, Rng &rng);

struct WeightMoment {
    int weight = 0;
    int masks = 0;
    double empirical_mean = 0;
    double closed_mean = 0;
    /// Closed-form standard error of the empirical mean.
    double standard_error = 0;
    double z_score = 0;
};

struct FourierMoment {
    uint64_t y = 0;
    int weight = 0;
    double empirical_mean = 0;
    double empirical_variance = 0;
    double closed_mean = 0;
    double closed_variance = 0;
    double z_score = 0;
    /// Empirical standard deviation over the mean (self-averaging measure).
    double relative_deviation = 0;
};

struct MomentReport {
    int n = 0;
    uint64_t trials = 0;
    uint64_t seed = 0;
    std::vector<WeightMoment> purity_by_weight;
    std::vector<FourierMoment> fourier;
    double max_abs_purity_z = 0;
    double max_abs_fourier_z = 0;
    double max_relative_deviation = 0;
    /// Largest |P(y)| seen at odd |y|, where the law is exactly zero.
    double max_odd_weight_mass = 0;
    /// Set when trials < 2: empirical variances are undefined.
    bool degenerate = false;
};

/// Samples Haar states and compares purity and t=2 Fourier moments with the closed forms.
MomentReport monte_carlo_haar_moments(int n, uint64_t trials, Rng &rng);

struct CovarianceCheck {
    uint64_t x = 0;
    uint64_t x2 = 0;
    double empirical = 0;
    double closed = 0;
    double standard_error = 0;
    double z_score = 0;
};

/// Empirical purity covariance at the requested mask pairs over Haar states.
std::vector<CovarianceCheck> monte_carlo_purity_covariance(
    int n, const std::vector<std::pair<uint64_t, uint64_t>> &pairs, uint64_t trials, Rng &rng);

}  // namespace hiddencut

#endif

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


#include "hiddencut/haarstats.h"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "hiddencut/bits.h"
#include "hiddencut/purity.h"
#include "hiddencut/wht.h"

namespace hiddencut {

namespace {

void check_n(int n) {
    if (n < 1 || n > 62) {
        throw std::invalid_argument("haarstats: n must lie in [1, 62]");
    }
}

double binomial(int k, int j) {
    double c = 1;
    for (int i = 1; i <= j; i++) {
        c = c * (k - j + i) / i;
    }
    return c;
}

/// z-score that stays finite when the reference spread is exactly zero.
double safe_z(double diff, double se) {
    if (se > 0) {
        return diff / se;
    }
    return std::abs(diff) < 1e-12 ? 0.0 : diff / 1e-12;
}

/// Incremental XOR basis indexed by leading bit.
class WordBasis {
   public:
    bool insert(uint64_t v) {
        while (v) {
            int top = 63 - std::countl_zero(v);
            if (!rows_[top]) {
                rows_[top] = v;
                return true;
            }
            v ^= rows_[top];
        }
        return false;
    }

   private:
    std::array<uint64_t, 64> rows_{};
};

}  // namespace

double mean_purity(int n, int weight) {
    check_n(n);
    if (weight < 0 || weight > n) {
        throw std::invalid_argument("mean_purity: weight out of range");
    }
    return (std::ldexp(1.0, -weight) + std::ldexp(1.0, weight - n)) / (1.0 + std::ldexp(1.0, -n));
}

double purity_covariance(int n, uint64_t x, uint64_t x2) {
    check_n(n);
    if ((x | x2) >> n) {
        throw std::invalid_argument("purity_covariance: mask has bits beyond n");
    }
    double big_n = std::ldexp(1.0, n);
    int d = popcount(x ^ x2);
    double joint = 2.0 * (std::ldexp(1.0, d) + std::ldexp(1.0, n - d)) / ((big_n + 1) * (big_n + 2) * (big_n + 3));
    double px = mean_purity(n, popcount(x));
    double px2 = mean_purity(n, popcount(x2));
    return joint - 2.0 / ((big_n + 2) * (big_n + 3)) * px * px2;
}

double purity_covariance(const CutMask &x, const CutMask &x2) {
    if (x.num_qubits() != x2.num_qubits()) {
        throw std::invalid_argument("purity_covariance: mask length mismatch");
    }
    return purity_covariance(x.num_qubits(), x.bits(), x2.bits());
}

double fourier_mean(int n, uint64_t y) {
    check_n(n);
    int w = popcount(y);
    if (w % 2 != 0) {
        return 0;
    }
    double big_n = std::ldexp(1.0, n);
    return 2.0 * std::pow(3.0, n - w) / (big_n * (big_n + 1));
}

double fourier_variance(int n, uint64_t y) {
    check_n(n);
    int w = popcount(y);
    if (w % 2 != 0) {
        return 0;
    }
    double big_n = std::ldexp(1.0, n);
    double num = std::ldexp(1.0, 2 - 2 * n) * std::pow(3.0, n - 2 * w) *
                 (big_n * (big_n + 1) * std::pow(3.0, w) - 2.0 * std::pow(3.0, n));
    return num / ((big_n + 1) * (big_n + 1) * (big_n + 2) * (big_n + 3));
}

double q_p(int n, int p) {
    if (n < 0 || p < 0) {
        throw std::invalid_argument("q_p: n and p must be nonnegative");
    }
    return 4.0 * std::pow((2.0 + std::ldexp(1.0, -p)) / 4.0, n);
}

double pi_lower_bound_raw(int n, int k) {
    if (k < 0) {
        throw std::invalid_argument("pi_lower_bound: k must be nonnegative");
    }
    double sum = 0;
    for (int p = 0; p < k; p++) {
        sum += binomial(k, p + 1) * q_p(n, p);
    }
    return 1.0 - sum;
}

double pi_lower_bound(int n, int k) {
    return std::clamp(pi_lower_bound_raw(n, k), 0.0, 1.0);
}

std::vector<double> rejection_law(const SetPartition &cut) {
    int n = cut.num_qubits();
    check_n(n);
    if (n > 26) {
        throw std::invalid_argument("rejection_law: n too large to enumerate");
    }
    std::vector<double> law(uint64_t{1} << n, 0.0);
    double total = 0;
    for (uint64_t y = 0; y < law.size(); y++) {
        if (cut.in_cut_subspace(y)) {
            law[y] = std::pow(3.0, -popcount(y));
            total += law[y];
        }
    }
    for (double &p : law) {
        p /= total;
    }
    return law;
}

uint64_t bernoulli_rejection_sampler(const SetPartition &cut, Rng &rng) {
    int n = cut.num_qubits();
    check_n(n);
    uint64_t mask = low_mask(n);
    while (true) {
        // AND of two fair words: each bit is 1 with probability 1/4.
        uint64_t y = rng.next_u64() & rng.next_u64() & mask;
        if (cut.in_cut_subspace(y)) {
            return y;
        }
    }
}

PiEstimate monte_carlo_pi(int k, uint64_t trials, const SetPartition &cut, Rng &rng) {
    if (k < 0) {
        throw std::invalid_argument("monte_carlo_pi: k must be nonnegative");
    }
    PiEstimate est;
    est.n = cut.num_qubits();
    est.k = k;
    est.trials = trials;
    for (uint64_t trial = 0; trial < trials; trial++) {
        WordBasis basis;
        bool independent = true;
        for (int i = 0; i < k && independent; i++) {
            independent = basis.insert(bernoulli_rejection_sampler(cut, rng));
        }
        est.independent += independent;
    }
    est.estimate = trials ? static_cast<double>(est.independent) / trials : 0.0;
    est.wilson = wilson_interval(est.independent, trials);
    est.lower_bound = pi_lower_bound(est.n, k);
    return est;
}

MomentReport monte_carlo_haar_moments(int n, uint64_t trials, Rng &rng) {
    check_n(n);
    if (trials == 0) {
        throw std::invalid_argument("monte_carlo_haar_moments: trials must be positive");
    }
    MomentReport report;
    report.n = n;
    report.trials = trials;
    report.seed = rng.seed();
    report.degenerate = trials < 2;
    uint64_t dim = uint64_t{1} << n;

    std::vector<std::vector<uint64_t>> masks_by_weight(n + 1);
    for (uint64_t x = 0; x < dim; x++) {
        masks_by_weight[popcount(x)].push_back(x);
    }

    std::vector<double> weight_sum(n + 1, 0.0);
    std::vector<double> fourier_sum(dim, 0.0);
    std::vector<double> fourier_sq(dim, 0.0);
    for (uint64_t trial = 0; trial < trials; trial++) {
        Rng stream = rng.split(trial);
        auto feature = entanglement_feature(haar_random_state(n, stream, n));
        for (int w = 0; w <= n; w++) {
            double acc = 0;
            for (uint64_t x : masks_by_weight[w]) {
                acc += feature.values[x];
            }
            weight_sum[w] += acc / masks_by_weight[w].size();
        }
        auto dist = statehsp_distribution(feature, 2);
        for (uint64_t y = 0; y < dim; y++) {
            fourier_sum[y] += dist.probs[y];
            fourier_sq[y] += dist.probs[y] * dist.probs[y];
        }
    }

    double t = static_cast<double>(trials);
    for (int w = 0; w <= n; w++) {
        const auto &masks = masks_by_weight[w];
        double var = 0;
        for (uint64_t a : masks) {
            for (uint64_t b : masks) {
                var += purity_covariance(n, a, b);
            }
        }
        var /= static_cast<double>(masks.size()) * masks.size();
        WeightMoment row;
        row.weight = w;
        row.masks = static_cast<int>(masks.size());
        row.empirical_mean = weight_sum[w] / t;
        row.closed_mean = mean_purity(n, w);
        row.standard_error = std::sqrt(std::max(0.0, var) / t);
        row.z_score = safe_z(row.empirical_mean - row.closed_mean, row.standard_error);
        report.max_abs_purity_z = std::max(report.max_abs_purity_z, std::abs(row.z_score));
        report.purity_by_weight.push_back(row);
    }

    for (uint64_t y = 0; y < dim; y++) {
        double m = fourier_sum[y] / t;
        if (popcount(y) % 2 != 0) {
            report.max_odd_weight_mass = std::max(report.max_odd_weight_mass, std::abs(m));
            continue;
        }
        FourierMoment row;
        row.y = y;
        row.weight = popcount(y);
        row.empirical_mean = m;
        row.empirical_variance = trials > 1 ? std::max(0.0, (fourier_sq[y] - t * m * m) / (t - 1)) : 0.0;
        row.closed_mean = fourier_mean(n, y);
        row.closed_variance = fourier_variance(n, y);
        row.z_score = safe_z(m - row.closed_mean, std::sqrt(std::max(0.0, row.closed_variance) / t));
        row.relative_deviation = m > 0 ? std::sqrt(row.empirical_variance) / m : 0.0;
        report.max_abs_fourier_z = std::max(report.max_abs_fourier_z, std::abs(row.z_score));
        report.max_relative_deviation = std::max(report.max_relative_deviation, row.relative_deviation);
        report.fourier.push_back(row);
    }
    return report;
}

std::vector<CovarianceCheck> monte_carlo_purity_covariance(
    int n, const std::vector<std::pair<uint64_t, uint64_t>> &pairs, uint64_t trials, Rng &rng) {
    check_n(n);
    if (trials < 2) {
        throw std::invalid_argument("monte_carlo_purity_covariance: need at least two trials");
    }
    std::vector<std::vector<double>> a(pairs.size()), b(pairs.size());
    for (uint64_t trial = 0; trial < trials; trial++) {
        Rng stream = rng.split(trial);
        PureState psi = haar_random_state(n, stream, n);
        for (size_t i = 0; i < pairs.size(); i++) {
            a[i].push_back(purity(psi, pairs[i].first));
            b[i].push_back(purity(psi, pairs[i].second));
        }
    }
    std::vector<CovarianceCheck> out;
    double t = static_cast<double>(trials);
    for (size_t i = 0; i < pairs.size(); i++) {
        double ma = mean(a[i]);
        double mb = mean(b[i]);
        std::vector<double> prod(trials);
        for (uint64_t j = 0; j < trials; j++) {
            prod[j] = (a[i][j] - ma) * (b[i][j] - mb);
        }
        CovarianceCheck row;
        row.x = pairs[i].first;
        row.x2 = pairs[i].second;
        row.empirical = mean(prod) * t / (t - 1);
        row.closed = purity_covariance(n, row.x, row.x2);
        row.standard_error = std::sqrt(sample_variance(prod) / t);
        row.z_score = safe_z(row.empirical - row.closed, row.standard_error);
        out.push_back(row);
    }
    return out;
}

}  // namespace hiddencut

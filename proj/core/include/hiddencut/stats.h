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


#ifndef HIDDENCUT_STATS_H
#define HIDDENCUT_STATS_H

#include <cstdint>
#include <span>
#include <vector>

namespace hiddencut {

struct Interval {
    double lo = 0;
    double hi = 0;
    double half_width() const {
        return 0.5 * (hi - lo);
    }
};

/// Wilson score interval for a binomial proportion at normal quantile `z`.
Interval wilson_interval(uint64_t successes, uint64_t trials, double z = 1.959963984540054);

double mean(std::span<const double> xs);
/// Unbiased sample variance (zero for fewer than two points).
double sample_variance(std::span<const double> xs);

/// Upper tail P[X >= statistic] of a chi-square law with `dof` degrees of freedom.
double chi_square_sf(double statistic, double dof);

struct ChiSquareResult {
    double statistic = 0;
    int dof = 0;
    double p_value = 1;
    /// Number of cells left after pooling small-expectation cells.
    int cells = 0;
};

/// Pearson goodness of fit of `observed` counts against `expected_probs`.
/// Cells whose expected count is below `min_expected` are pooled into one.
ChiSquareResult chi_square_test(
    std::span<const uint64_t> observed, std::span<const double> expected_probs, double min_expected = 5.0);

struct LinearFit {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
};

/// Ordinary least squares y = slope * x + intercept.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace hiddencut

#endif

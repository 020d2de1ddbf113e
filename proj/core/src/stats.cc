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


#include "hiddencut/stats.h"

#include <boost/math/special_functions/gamma.hpp>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hiddencut {

Interval wilson_interval(uint64_t successes, uint64_t trials, double z) {
    if (trials == 0) {
        return Interval{0.0, 1.0};
    }
    if (successes > trials) {
        throw std::invalid_argument("wilson_interval: successes exceed trials");
    }
    double n = static_cast<double>(trials);
    double p = successes / n;
    double z2 = z * z;
    double center = (p + z2 / (2 * n)) / (1 + z2 / n);
    double half = z / (1 + z2 / n) * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n));
    return Interval{std::max(0.0, center - half), std::min(1.0, center + half)};
}

double mean(std::span<const double> xs) {
    if (xs.empty()) {
        return 0;
    }
    double acc = 0;
    for (double x : xs) {
        acc += x;
    }
    return acc / xs.size();
}

double sample_variance(std::span<const double> xs) {
    if (xs.size() < 2) {
        return 0;
    }
    double m = mean(xs);
    double acc = 0;
    for (double x : xs) {
        acc += (x - m) * (x - m);
    }
    return acc / (xs.size() - 1);
}

double chi_square_sf(double statistic, double dof) {
    if (dof <= 0) {
        throw std::invalid_argument("chi_square_sf: dof must be positive");
    }
    if (statistic <= 0) {
        return 1.0;
    }
    return boost::math::gamma_q(dof / 2.0, statistic / 2.0);
}

ChiSquareResult chi_square_test(
    std::span<const uint64_t> observed, std::span<const double> expected_probs, double min_expected) {
    if (observed.size() != expected_probs.size()) {
        throw std::invalid_argument("chi_square_test: length mismatch");
    }
    double total = 0;
    for (uint64_t o : observed) {
        total += static_cast<double>(o);
    }
    double prob_total = 0;
    for (double p : expected_probs) {
        prob_total += p;
    }
    ChiSquareResult result;
    double pooled_obs = 0;
    double pooled_exp = 0;
    for (size_t i = 0; i < observed.size(); i++) {
        double e = total * expected_probs[i] / prob_total;
        if (e < min_expected) {
            pooled_obs += static_cast<double>(observed[i]);
            pooled_exp += e;
            continue;
        }
        double d = observed[i] - e;
        result.statistic += d * d / e;
        result.cells++;
    }
    if (pooled_exp > 0) {
        double d = pooled_obs - pooled_exp;
        result.statistic += d * d / pooled_exp;
        result.cells++;
    } else if (pooled_obs > 0) {
        // Observations where the model puts no mass at all.
        result.statistic = INFINITY;
        result.cells++;
    }
    result.dof = result.cells - 1;
    result.p_value = result.dof > 0 ? chi_square_sf(result.statistic, result.dof) : 1.0;
    if (std::isinf(result.statistic)) {
        result.p_value = 0;
    }
    return result;
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) {
        throw std::invalid_argument("fit_line: need at least two paired points");
    }
    double mx = mean(x);
    double my = mean(y);
    double sxx = 0;
    double sxy = 0;
    double syy = 0;
    for (size_t i = 0; i < x.size(); i++) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    if (sxx == 0) {
        throw std::invalid_argument("fit_line: x values are all equal");
    }
    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return fit;
}

}  // namespace hiddencut

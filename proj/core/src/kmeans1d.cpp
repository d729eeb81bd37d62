/*
 * Copyright 2026 The lwkmeans Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lwk/kmeans1d.hpp"

#include "lwk/types.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace lwk {

namespace {

struct SegmentCost {
    std::vector<double> prefix;    // prefix[i] = sum of first i values
    std::vector<double> prefix2;   // prefix2[i] = sum of first i squares

    explicit SegmentCost(const std::vector<double>& xs) {
        prefix.resize(xs.size() + 1, 0.0);
        prefix2.resize(xs.size() + 1, 0.0);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            prefix[i + 1] = prefix[i] + xs[i];
            prefix2[i + 1] = prefix2[i] + xs[i] * xs[i];
        }
    }

    // Within-SS of xs[i..j], inclusive. Clamped at zero against rounding.
    double operator()(std::size_t i, std::size_t j) const {
        const double m = static_cast<double>(j - i + 1);
        const double s = prefix[j + 1] - prefix[i];
        const double ss = prefix2[j + 1] - prefix2[i];
        return std::max(0.0, ss - s * s / m);
    }
};

// Fills cur[j] = min_{i <= j} prev[i-1] + cost(i, j) for j in [lo, hi],
// exploiting that the optimal split index is nondecreasing in j.
void solve_layer(const SegmentCost& cost, const std::vector<double>& prev,
                 std::vector<double>& cur, std::size_t layer, std::size_t lo,
                 std::size_t hi, std::size_t opt_lo, std::size_t opt_hi) {
    if (lo > hi) return;
    const std::size_t mid = lo + (hi - lo) / 2;
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_i = opt_lo;
    const std::size_t i_max = std::min(mid, opt_hi);
    for (std::size_t i = std::max(layer - 1, opt_lo); i <= i_max; ++i) {
        const double v = prev[i - 1] + cost(i, mid);
        if (v < best) {
            best = v;
            best_i = i;
        }
    }
    cur[mid] = best;
    if (mid > lo) solve_layer(cost, prev, cur, layer, lo, mid - 1, opt_lo, best_i);
    if (mid < hi) solve_layer(cost, prev, cur, layer, mid + 1, hi, best_i, opt_hi);
}

}  // namespace

double kmeans1d_optimum(const Eigen::Ref<const Eigen::VectorXd>& x, int k) {
    if (k < 1) throw ValidationError("k", "cluster count must be >= 1");
    const std::size_t n = static_cast<std::size_t>(x.size());
    if (n == 0) throw ValidationError("x", "empty feature column");
    if (static_cast<std::size_t>(k) >= n) return 0.0;

    std::vector<double> xs(x.data(), x.data() + n);
    std::sort(xs.begin(), xs.end());
    const SegmentCost cost(xs);

    std::vector<double> prev(n), cur(n);
    for (std::size_t j = 0; j < n; ++j) prev[j] = cost(0, j);
    for (std::size_t layer = 2; layer <= static_cast<std::size_t>(k); ++layer) {
        solve_layer(cost, prev, cur, layer, layer - 1, n - 1, layer - 1, n - 1);
        // positions before layer-1 cannot host `layer` nonempty clusters
        for (std::size_t j = 0; j + 1 < layer; ++j) cur[j] = 0.0;
        std::swap(prev, cur);
    }
    return prev[n - 1];
}

}  // namespace lwk

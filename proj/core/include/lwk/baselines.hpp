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

#ifndef LWK_BASELINES_HPP
#define LWK_BASELINES_HPP

#include "lwk/types.hpp"

namespace lwk {

/// Plain Lloyd iteration under squared Euclidean distance. The result's
/// weights field is fixed at all ones; the trace stores the unnormalized
/// within-cluster sum of squares after every sweep. k = 1 is allowed and
/// returns the grand mean.
FitResult fit_kmeans(const DataMatrix& X, int k, double epsilon, int max_iter,
                     std::uint64_t seed);

/// Automated feature weighting: the k-means loop with an extra closed-form
/// weight step, w_l = 1 / sum_t (D_l / D_t)^(1/(beta-1)). Weights always sum
/// to one; if some dispersions are exactly zero, those features split the
/// whole unit mass equally (the limit of the formula) and the rest get zero.
FitResult fit_wkmeans(const DataMatrix& X, int k, int beta, double epsilon,
                      int max_iter, std::uint64_t seed);

struct SparseKmConfig {
    int k = 2;
    double s = 1.5;  // L1 bound on the weights, 1 < s <= sqrt(p)
    double epsilon = 1e-6;
    int max_iter = 100;
    std::uint64_t seed = 0;
    int n_restarts = 20;
};

/// L1/L2-constrained sparse clustering: alternates k-means on weight-scaled
/// data with a weight step maximizing sum_l w_l * a_l (a_l the per-feature
/// between-cluster score) subject to ||W||_2 <= 1, ||W||_1 <= s, W >= 0,
/// solved by soft-thresholding a with the threshold found by bisection.
/// The trace stores the negated weighted between-cluster objective so that
/// lower is better, matching the other algorithms.
FitResult fit_sparse_kmeans(const DataMatrix& X, const SparseKmConfig& cfg);

/// The sparse weight step on its own: maximize dot(w, scores) over the
/// constraint set above. Exposed so the maximizer can be cross-checked
/// against exhaustive search.
Eigen::VectorXd sparse_weight_update(const Eigen::VectorXd& scores, double s);

}  // namespace lwk

#endif  // LWK_BASELINES_HPP

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

#ifndef LWK_LWKMEANS_HPP
#define LWK_LWKMEANS_HPP

#include "lwk/types.hpp"

#include <functional>

namespace lwk {

/// Soft-threshold operator: x - y when x > y, x + y when x < -y, else 0.
/// Requires y >= 0.
double soft_threshold(double x, double y);

/// Per-feature within-cluster sum of squared deviations from the assigned
/// centroid: D_l = sum_i (x_{i,l} - z_{label(i),l})^2.
Eigen::VectorXd compute_dispersions(const DataMatrix& X, const Assignment& A,
                                    const Centroids& Z);

/// Assigns every point to the centroid minimizing the penalized distance
/// sum_l (w_l^beta + (lambda/p^2) w_l) (x_l - z_l)^2. Ties break to the
/// lowest cluster index.
Assignment update_assignments(const DataMatrix& X, const Centroids& Z,
                              const WeightVector& W, double lambda, int beta);

/// Coordinate-wise means of each cluster's members. An empty cluster keeps
/// its previous center when `previous` is given, otherwise it is an error;
/// the fitting loop uses the penalized-repair overload below.
Centroids update_centroids(const DataMatrix& X, const Assignment& A,
                           const Centroids* previous = nullptr);

/// Means with empty-cluster repair: an empty cluster's center is relocated
/// to the data point with maximum penalized distance from that center.
Centroids update_centroids(const DataMatrix& X, const Assignment& A,
                           const Centroids& previous, const WeightVector& W,
                           double lambda, int beta);

/// Closed-form weight update. For each feature,
///   w_l = [ S(n*alpha/D_l, lambda/p^2) / beta ]^(1/(beta-1)),  and 0 when D_l = 0.
WeightVector update_weights(const Eigen::VectorXd& dispersions, double alpha,
                            double lambda, int beta, Eigen::Index n, Eigen::Index p);

/// alpha = ( sum_l [n / (beta * D_l)]^(1/(beta-1)) )^-(beta-1), with
/// zero-dispersion features excluded from the sum. Throws
/// DegenerateDataError when every D_l is zero.
double alpha_from_dispersions(const Eigen::VectorXd& dispersions, Eigen::Index n,
                              int beta);

/// Data-derived weight reward. Uses the exact per-feature one-dimensional
/// k-means optimum as D_l, which lower-bounds the dispersion of every
/// iterate, so the weight sum stays <= 1 at every update. Deterministic.
double select_alpha(const DataMatrix& X, int k, int beta);

/// The penalized clustering objective:
///   (1/n) sum_l (w_l^beta + (lambda/p^2) w_l) D_l - alpha * sum_l w_l.
double objective(const DataMatrix& X, const Assignment& A, const Centroids& Z,
                 const WeightVector& W, double lambda, double alpha, int beta);

/// Smallest penalty that zeroes every weight at dispersions D:
/// p^2 * max_l (n * alpha / D_l) over D_l > 0.
double lambda_max_bound(const Eigen::VectorXd& dispersions, double alpha,
                        Eigen::Index n, Eigen::Index p);

/// Diagnostic estimate of the penalty range on which at least one weight
/// stays bounded away from zero: alpha * p^2 / (4 * max_l var_l), the
/// population quantity estimated from the sample. Not enforced anywhere;
/// reported so over-penalized runs can be recognized.
double lambda_positive_weight_bound(const DataMatrix& X, int k, int beta);

/// One full fit: centers initialized to k distinct random data points,
/// weights to 1/p, then sweeps of (centers, weights, assignments) until the
/// objective changes by at most cfg.epsilon or max_iter is hit. A weight
/// update that collapses to the zero vector stops the run with
/// degenerate = true and keeps the previous assignment.
FitResult fit(const DataMatrix& X, const LwkConfig& cfg);

/// cfg.n_restarts independent fits with seeds derived from cfg.seed; the
/// best is the one with the lowest final objective (lowest restart index on
/// ties). Restarts may run in parallel; per-restart output is identical
/// either way.
MultiFitResult fit_multi(const DataMatrix& X, const LwkConfig& cfg);

/// Runs `single` with derived seeds and collects the best-of-restarts, used
/// by every algorithm that follows the common restart protocol.
MultiFitResult best_of_restarts(int n_restarts, std::uint64_t seed,
                                const std::function<FitResult(std::uint64_t)>& single);

}  // namespace lwk

#endif  // LWK_LWKMEANS_HPP

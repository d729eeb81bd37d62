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

#ifndef LWK_REGPATH_HPP
#define LWK_REGPATH_HPP

#include "lwk/types.hpp"

#include <optional>
#include <vector>

namespace lwk {

/// Aggregated restarts at one penalty value. Weights are element-wise mean
/// and median over all restarts (degenerate restarts contribute their zero
/// vectors); CER statistics are present iff truth labels were supplied.
struct PathPoint {
    double lambda = 0.0;
    Eigen::VectorXd mean_weights;
    Eigen::VectorXd median_weights;
    std::optional<double> mean_cer;
    std::optional<double> median_cer;
    double n_selected_mean = 0.0;     // mean count of strictly positive weights
    int n_selected_median = 0;        // positive entries of the median weights
    double degenerate_fraction = 0.0; // fraction of restarts that collapsed
};

/// Runs cfg.n_restarts fits at every penalty in `lambdas` (a descending
/// positive grid) with restart seeds derived from (cfg.seed, grid index,
/// restart index). alpha is resolved once for the whole sweep. The
/// (lambda x restart) grid may execute in parallel; outputs are ordered by
/// the input grid and independent of scheduling.
std::vector<PathPoint> sweep(const DataMatrix& X, const LwkConfig& cfg,
                             const std::vector<double>& lambdas,
                             const Assignment* truth = nullptr);

/// Log-spaced grid of `points` values from lambda_max down to
/// lambda_max / 10^3, where lambda_max is the smallest penalty that zeroes
/// every weight at the dispersions of a freshly initialized fit.
std::vector<double> auto_lambda_grid(const DataMatrix& X, const LwkConfig& cfg,
                                     int points = 25);

struct PlateauResult {
    double lambda_high = 0.0;
    double lambda_low = 0.0;
    int n_features = 0;  // the stable selected-feature count
    int begin = 0;       // grid indices of the run, inclusive
    int end = 0;
};

/// The longest contiguous run of grid points sharing the same positive
/// selected-feature count (from the median weights). Ties go to the run at
/// larger penalties; empty when no such run spans at least two grid points.
/// The run ending at the smallest grid value is a fallback only: how long it
/// looks depends on where the grid stops rather than on the data.
std::optional<PlateauResult> select_lambda_plateau(const std::vector<PathPoint>& path);

/// Element-wise median of equally sized vectors (even counts average the two
/// middle values). This is the aggregation behind median regularization
/// paths: a minority of collapsed restarts cannot move it.
Eigen::VectorXd element_wise_median(const std::vector<Eigen::VectorXd>& vectors);

}  // namespace lwk

#endif  // LWK_REGPATH_HPP

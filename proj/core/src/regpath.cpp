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

#include "lwk/regpath.hpp"

#include "lwk/lwkmeans.hpp"
#include "lwk/metrics.hpp"
#include "lwk/parallel.hpp"
#include "lwk/rng.hpp"

#include <algorithm>
#include <cmath>

namespace lwk {

namespace {

double median_of(std::vector<double> v) {
    const std::size_t m = v.size();
    std::sort(v.begin(), v.end());
    if (m % 2 == 1) return v[m / 2];
    return 0.5 * (v[m / 2 - 1] + v[m / 2]);
}

}  // namespace

Eigen::VectorXd element_wise_median(const std::vector<Eigen::VectorXd>& vectors) {
    if (vectors.empty()) throw ValidationError("vectors", "nothing to aggregate");
    const Eigen::Index p = vectors.front().size();
    for (const auto& v : vectors) {
        if (v.size() != p) throw ValidationError("vectors", "length mismatch");
    }
    Eigen::VectorXd out(p);
    std::vector<double> column(vectors.size());
    for (Eigen::Index l = 0; l < p; ++l) {
        for (std::size_t j = 0; j < vectors.size(); ++j) column[j] = vectors[j][l];
        out[l] = median_of(column);
    }
    return out;
}

std::vector<PathPoint> sweep(const DataMatrix& X, const LwkConfig& cfg_in,
                             const std::vector<double>& lambdas,
                             const Assignment* truth) {
    LwkConfig cfg = validate_config(cfg_in, X);
    if (lambdas.empty()) throw ValidationError("lambdas", "empty penalty grid");
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        if (!(lambdas[i] > 0.0)) {
            throw ValidationError("lambdas", "grid values must be positive");
        }
        if (i > 0 && lambdas[i] > lambdas[i - 1]) {
            throw ValidationError("lambdas", "grid must be descending");
        }
    }
    if (truth != nullptr && truth->n() != X.n()) {
        throw ValidationError("truth", "label count does not match observations");
    }
    if (!cfg.alpha) cfg.alpha = select_alpha(X, cfg.k, cfg.beta);

    const std::size_t t = static_cast<std::size_t>(cfg.n_restarts);
    const std::size_t total = lambdas.size() * t;
    std::vector<FitResult> fits(total);
    parallel_for(total, [&](std::size_t flat) {
        const std::size_t i = flat / t;
        const std::size_t j = flat % t;
        LwkConfig c = cfg;
        c.lambda = lambdas[i];
        c.seed = derive_seed(cfg.seed, i, j);
        fits[flat] = fit(X, c);
    });

    const Eigen::Index p = X.p();
    std::vector<PathPoint> path(lambdas.size());
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
        PathPoint& pt = path[i];
        pt.lambda = lambdas[i];
        pt.mean_weights = Eigen::VectorXd::Zero(p);
        pt.median_weights.resize(p);

        std::vector<double> cers;
        double selected = 0.0;
        int degenerate = 0;
        for (std::size_t j = 0; j < t; ++j) {
            const FitResult& f = fits[i * t + j];
            pt.mean_weights += f.weights.weights;
            selected += static_cast<double>((f.weights.weights.array() > 0.0).count());
            degenerate += f.degenerate ? 1 : 0;
            if (truth != nullptr) cers.push_back(cer(*truth, f.assignment));
        }
        pt.mean_weights /= static_cast<double>(t);
        std::vector<Eigen::VectorXd> weight_vectors;
        weight_vectors.reserve(t);
        for (std::size_t j = 0; j < t; ++j) {
            weight_vectors.push_back(fits[i * t + j].weights.weights);
        }
        pt.median_weights = element_wise_median(weight_vectors);
        pt.n_selected_mean = selected / static_cast<double>(t);
        pt.n_selected_median =
            static_cast<int>((pt.median_weights.array() > 0.0).count());
        pt.degenerate_fraction = static_cast<double>(degenerate) / static_cast<double>(t);
        if (truth != nullptr) {
            double sum = 0.0;
            for (const double c : cers) sum += c;
            pt.mean_cer = sum / static_cast<double>(cers.size());
            pt.median_cer = median_of(cers);
        }
    }
    return path;
}

std::vector<double> auto_lambda_grid(const DataMatrix& X, const LwkConfig& cfg_in,
                                     int points) {
    LwkConfig cfg = validate_config(cfg_in, X);
    if (points < 2) throw ValidationError("points", "grid needs at least 2 values");
    if (!cfg.alpha) cfg.alpha = select_alpha(X, cfg.k, cfg.beta);

    // Dispersions as the first weight update would see them: random distinct
    // centers, uniform weights, one assignment, one centroid update.
    Rng rng(derive_seed(cfg.seed, 0x9d2c5680));
    const auto idx = rng.sample_without_replacement(X.n(), cfg.k);
    Eigen::MatrixXd init(cfg.k, X.p());
    for (int j = 0; j < cfg.k; ++j) init.row(j) = X.values.row(idx[j]);
    Centroids Z(std::move(init));
    const WeightVector W(
        Eigen::VectorXd::Constant(X.p(), 1.0 / static_cast<double>(X.p())));
    Assignment U = update_assignments(X, Z, W, cfg.lambda, cfg.beta);
    Z = update_centroids(X, U, Z, W, cfg.lambda, cfg.beta);
    const Eigen::VectorXd d0 = compute_dispersions(X, U, Z);

    const double top = lambda_max_bound(d0, *cfg.alpha, X.n(), X.p());
    if (!(top > 0.0)) {
        throw DegenerateDataError("initialization dispersions admit no positive penalty");
    }
    std::vector<double> grid(static_cast<std::size_t>(points));
    const double ratio = std::pow(1e-3, 1.0 / (points - 1));
    double v = top;
    for (int i = 0; i < points; ++i) {
        grid[static_cast<std::size_t>(i)] = v;
        v *= ratio;
    }
    return grid;
}

std::optional<PlateauResult> select_lambda_plateau(const std::vector<PathPoint>& path) {
    // The run touching the smallest grid value is ignored unless it is the
    // only candidate: its length reflects where the grid stops, not where
    // the selected-feature count stabilizes.
    std::optional<PlateauResult> best;
    std::optional<PlateauResult> terminal;
    std::size_t i = 0;
    while (i < path.size()) {
        std::size_t j = i;
        while (j < path.size() &&
               path[j].n_selected_median == path[i].n_selected_median) {
            ++j;
        }
        const std::size_t len = j - i;
        if (path[i].n_selected_median > 0 && len >= 2) {
            PlateauResult r;
            r.begin = static_cast<int>(i);
            r.end = static_cast<int>(j - 1);
            r.lambda_high = path[i].lambda;
            r.lambda_low = path[j - 1].lambda;
            r.n_features = path[i].n_selected_median;
            if (j == path.size()) {
                terminal = r;
            } else if (!best || static_cast<int>(len) > best->end - best->begin + 1) {
                best = r;
            }
        }
        i = j;
    }
    return best ? best : terminal;
}

}  // namespace lwk

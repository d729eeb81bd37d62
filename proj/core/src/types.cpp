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

#include "lwk/types.hpp"

#include <cmath>

namespace lwk {

DataMatrix::DataMatrix(Eigen::MatrixXd v) : values(std::move(v)) { validate(); }

void DataMatrix::validate() const {
    if (values.rows() < 2) {
        throw ValidationError("n", "need at least 2 observations, got " +
                                       std::to_string(values.rows()));
    }
    if (values.cols() < 1) {
        throw ValidationError("p", "need at least 1 feature");
    }
    if (!values.allFinite()) {
        throw ValidationError("values", "matrix contains non-finite entries");
    }
}

Assignment::Assignment(Eigen::VectorXi l, int k_) : labels(std::move(l)), k(k_) {
    validate();
}

void Assignment::validate() const {
    if (k < 1) {
        throw ValidationError("k", "cluster count must be >= 1, got " + std::to_string(k));
    }
    if (labels.size() < 1) {
        throw ValidationError("labels", "empty assignment");
    }
    for (Eigen::Index i = 0; i < labels.size(); ++i) {
        if (labels[i] < 0 || labels[i] >= k) {
            throw ValidationError("labels", "label " + std::to_string(labels[i]) +
                                                " at row " + std::to_string(i) +
                                                " outside [0, " + std::to_string(k) + ")");
        }
    }
}

Eigen::MatrixXd Assignment::to_onehot() const {
    Eigen::MatrixXd u = Eigen::MatrixXd::Zero(labels.size(), k);
    for (Eigen::Index i = 0; i < labels.size(); ++i) u(i, labels[i]) = 1.0;
    return u;
}

Centroids::Centroids(Eigen::MatrixXd c) : centers(std::move(c)) { validate(); }

void Centroids::validate() const {
    if (!centers.allFinite()) {
        throw ValidationError("centers", "centroid matrix contains non-finite entries");
    }
}

WeightVector::WeightVector(Eigen::VectorXd w) : weights(std::move(w)) { validate(); }

void WeightVector::validate() const {
    if (!weights.allFinite()) {
        throw ValidationError("weights", "weight vector contains non-finite entries");
    }
    if ((weights.array() < 0.0).any()) {
        throw ValidationError("weights", "weights must be nonnegative");
    }
}

double penalized_feature_multiplier(double w, double lambda, int p, int beta) {
    if (!std::isfinite(w) || !std::isfinite(lambda)) {
        throw ValidationError("penalized_feature_multiplier", "non-finite input");
    }
    if (w < 0.0) throw ValidationError("w", "weight must be nonnegative");
    if (lambda < 0.0) throw ValidationError("lambda", "penalty must be nonnegative");
    if (p < 1) throw ValidationError("p", "feature count must be positive");
    if (beta < 2 || beta % 2 != 0) {
        throw ValidationError("beta", "exponent must be an even integer >= 2");
    }
    const double pp = static_cast<double>(p) * static_cast<double>(p);
    return std::pow(w, beta) + lambda / pp * w;
}

Eigen::ArrayXd penalty_multipliers(const WeightVector& w, double lambda, int p, int beta) {
    Eigen::ArrayXd out(w.p());
    for (Eigen::Index l = 0; l < w.p(); ++l) {
        out[l] = penalized_feature_multiplier(w.weights[l], lambda, p, beta);
    }
    return out;
}

LwkConfig validate_config(const LwkConfig& cfg, const DataMatrix& X) {
    X.validate();
    if (cfg.k < 2) {
        throw ValidationError("k", "cluster count must be >= 2, got " + std::to_string(cfg.k));
    }
    if (cfg.k > X.n()) {
        throw ValidationError("k", "cluster count " + std::to_string(cfg.k) +
                                       " exceeds number of observations " +
                                       std::to_string(X.n()));
    }
    if (cfg.beta < 2 || cfg.beta % 2 != 0) {
        throw ValidationError("beta", "exponent must be an even integer >= 2, got " +
                                          std::to_string(cfg.beta));
    }
    if (!(cfg.epsilon > 0.0)) {
        throw ValidationError("epsilon", "convergence tolerance must be positive");
    }
    if (cfg.lambda < 0.0 || !std::isfinite(cfg.lambda)) {
        throw ValidationError("lambda", "penalty must be finite and nonnegative");
    }
    if (cfg.alpha && (!(*cfg.alpha >= 0.0) || !std::isfinite(*cfg.alpha))) {
        throw ValidationError("alpha", "weight reward must be finite and nonnegative");
    }
    if (cfg.max_iter < 1) {
        throw ValidationError("max_iter", "iteration cap must be positive");
    }
    if (cfg.n_restarts < 1) {
        throw ValidationError("n_restarts", "restart count must be positive");
    }
    return cfg;
}

}  // namespace lwk

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

#ifndef LWK_TYPES_HPP
#define LWK_TYPES_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lwk {

/// Thrown when an input or configuration violates a documented precondition.
/// The offending field name is kept so callers can report it precisely.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string field, const std::string& message)
        : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const { return field_; }

private:
    std::string field_;
};

/// Thrown when the data admits no meaningful solution (for example, every
/// per-feature dispersion is zero so no weight regularizer can be derived).
class DegenerateDataError : public std::runtime_error {
public:
    explicit DegenerateDataError(const std::string& message)
        : std::runtime_error(message) {}
};

/// Thrown by the CSV reader with a 1-based row/column location.
class CsvError : public std::runtime_error {
public:
    CsvError(std::string path, long row, long column, const std::string& message)
        : std::runtime_error(path + ":" + std::to_string(row) + ":" +
                             std::to_string(column) + ": " + message),
          path_(std::move(path)), row_(row), column_(column) {}

    const std::string& path() const { return path_; }
    long row() const { return row_; }
    long column() const { return column_; }

private:
    std::string path_;
    long row_;
    long column_;
};

/// n observations by p features, with the standardization metadata needed to
/// undo or audit the transform. Columns whose original scale was zero are
/// centered only and recorded in zero_variance_columns.
struct DataMatrix {
    Eigen::MatrixXd values;  // n x p, one observation per row
    bool standardized = false;
    Eigen::VectorXd feature_means;   // original column means (size p when standardized)
    Eigen::VectorXd feature_scales;  // original column scales (size p when standardized)
    std::vector<Eigen::Index> zero_variance_columns;

    DataMatrix() = default;
    explicit DataMatrix(Eigen::MatrixXd v);

    Eigen::Index n() const { return values.rows(); }
    Eigen::Index p() const { return values.cols(); }

    /// Enforces n >= 2, p >= 1 and finiteness of every entry.
    void validate() const;
};

/// Hard partition of n points into k clusters, stored as a dense label
/// vector; the one-hot membership matrix is recoverable via to_onehot().
struct Assignment {
    Eigen::VectorXi labels;  // values in [0, k)
    int k = 0;

    Assignment() = default;
    Assignment(Eigen::VectorXi l, int k_);

    Eigen::Index n() const { return labels.size(); }

    /// Labels in range and k >= 1. An Assignment used for fitting must also
    /// satisfy 2 <= k <= n, which validate_config enforces.
    void validate() const;

    /// n x k matrix with exactly one 1 per row.
    Eigen::MatrixXd to_onehot() const;
};

/// k cluster centers, one per row.
struct Centroids {
    Eigen::MatrixXd centers;  // k x p

    Centroids() = default;
    explicit Centroids(Eigen::MatrixXd c);

    Eigen::Index k() const { return centers.rows(); }
    Eigen::Index p() const { return centers.cols(); }

    void validate() const;
};

/// Nonnegative per-feature weights. A zero entry removes the feature from
/// every distance computation.
struct WeightVector {
    Eigen::VectorXd weights;  // length p, all entries >= 0

    WeightVector() = default;
    explicit WeightVector(Eigen::VectorXd w);

    Eigen::Index p() const { return weights.size(); }

    void validate() const;
};

/// Parameters of a lasso-weighted k-means run. beta must be an even integer
/// >= 2; lambda is the raw penalty (the p^2 normalization is applied
/// internally); alpha, when unset, is derived from the data by select_alpha.
struct LwkConfig {
    int k = 2;
    double lambda = 0.0;
    int beta = 4;
    std::optional<double> alpha;
    double epsilon = 1e-6;
    int max_iter = 100;
    std::uint64_t seed = 0;
    int n_restarts = 20;
};

/// A converged fit: the partition, centers and weights, plus the objective
/// value recorded after every full sweep and the final per-feature
/// dispersions. A degenerate run is one whose weight update collapsed to the
/// zero vector; its previous assignment is kept and iteration stops.
struct FitResult {
    Assignment assignment;
    Centroids centroids;
    WeightVector weights;
    std::vector<double> objective_trace;
    int iterations = 0;
    bool converged = false;
    bool degenerate = false;
    double alpha_used = 0.0;
    Eigen::VectorXd dispersions;

    double final_objective() const {
        return objective_trace.empty() ? 0.0 : objective_trace.back();
    }
};

/// Best-of-restarts result; restarts keeps every individual fit in restart
/// order for path statistics.
struct MultiFitResult {
    FitResult best;
    int best_index = 0;
    std::vector<FitResult> restarts;
};

/// w^beta + (lambda/p^2) * w for a single nonnegative weight. This is the
/// per-feature multiplier applied to squared coordinate distances in the
/// penalized objective and in every assignment step.
double penalized_feature_multiplier(double w, double lambda, int p, int beta);

/// Multiplier vector for a whole weight vector.
Eigen::ArrayXd penalty_multipliers(const WeightVector& w, double lambda, int p, int beta);

/// Validates an LwkConfig against a data matrix. Each violation throws a
/// ValidationError naming the offending field. Returns the config unchanged
/// when everything is in range.
LwkConfig validate_config(const LwkConfig& cfg, const DataMatrix& X);

}  // namespace lwk

#endif  // LWK_TYPES_HPP

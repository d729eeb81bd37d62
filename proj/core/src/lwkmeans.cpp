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

#include "lwk/lwkmeans.hpp"

#include "lwk/kmeans1d.hpp"
#include "lwk/parallel.hpp"
#include "lwk/rng.hpp"

#include <cmath>
#include <limits>

namespace lwk {

double soft_threshold(double x, double y) {
    if (!(y >= 0.0)) {
        throw ValidationError("y", "soft threshold requires y >= 0");
    }
    if (x > y) return x - y;
    if (x < -y) return x + y;
    return 0.0;
}

Eigen::VectorXd compute_dispersions(const DataMatrix& X, const Assignment& A,
                                    const Centroids& Z) {
    if (A.n() != X.n()) {
        throw ValidationError("assignment", "label count does not match observations");
    }
    if (Z.p() != X.p() || Z.k() < A.k) {
        throw ValidationError("centroids", "centroid shape does not match data/assignment");
    }
    Eigen::VectorXd d = Eigen::VectorXd::Zero(X.p());
    for (Eigen::Index i = 0; i < X.n(); ++i) {
        const auto diff = X.values.row(i) - Z.centers.row(A.labels[i]);
        d += diff.array().square().matrix().transpose();
    }
    return d;
}

Assignment update_assignments(const DataMatrix& X, const Centroids& Z,
                              const WeightVector& W, double lambda, int beta) {
    if (Z.p() != X.p() || W.p() != X.p()) {
        throw ValidationError("shapes", "centroids/weights do not match data");
    }
    const Eigen::Index n = X.n();
    const int k = static_cast<int>(Z.k());
    const Eigen::ArrayXd mult =
        penalty_multipliers(W, lambda, static_cast<int>(X.p()), beta);

    Eigen::VectorXi labels(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        int best = 0;
        double best_dist = std::numeric_limits<double>::infinity();
        for (int j = 0; j < k; ++j) {
            const auto diff = (X.values.row(i) - Z.centers.row(j)).array();
            const double dist = (mult * diff.square().transpose()).sum();
            if (dist < best_dist) {
                best_dist = dist;
                best = j;
            }
        }
        labels[i] = best;
    }
    return Assignment(std::move(labels), k);
}

namespace {

Centroids means_with_repair(const DataMatrix& X, const Assignment& A,
                            const Centroids* previous, const WeightVector* W,
                            double lambda, int beta) {
    const Eigen::Index p = X.p();
    const int k = A.k;
    Eigen::MatrixXd centers = Eigen::MatrixXd::Zero(k, p);
    Eigen::VectorXi counts = Eigen::VectorXi::Zero(k);
    for (Eigen::Index i = 0; i < X.n(); ++i) {
        centers.row(A.labels[i]) += X.values.row(i);
        counts[A.labels[i]] += 1;
    }
    std::vector<Eigen::Index> taken;
    for (int j = 0; j < k; ++j) {
        if (counts[j] > 0) {
            centers.row(j) /= static_cast<double>(counts[j]);
            continue;
        }
        if (previous == nullptr) {
            throw ValidationError("assignment", "cluster " + std::to_string(j) +
                                                    " is empty and no repair center given");
        }
        // Relocate to the point with maximum penalized distance from the
        // stale center, skipping points already used to repair this sweep.
        Eigen::ArrayXd mult = Eigen::ArrayXd::Ones(p);
        if (W != nullptr) {
            mult = penalty_multipliers(*W, lambda, static_cast<int>(p), beta);
        }
        double best_dist = -1.0;
        Eigen::Index best_i = 0;
        for (Eigen::Index i = 0; i < X.n(); ++i) {
            bool used = false;
            for (const Eigen::Index t : taken) used = used || (t == i);
            if (used) continue;
            const auto diff = (X.values.row(i) - previous->centers.row(j)).array();
            const double dist = (mult * diff.square().transpose()).sum();
            if (dist > best_dist) {
                best_dist = dist;
                best_i = i;
            }
        }
        centers.row(j) = X.values.row(best_i);
        taken.push_back(best_i);
    }
    return Centroids(std::move(centers));
}

}  // namespace

Centroids update_centroids(const DataMatrix& X, const Assignment& A,
                           const Centroids* previous) {
    return means_with_repair(X, A, previous, nullptr, 0.0, 2);
}

Centroids update_centroids(const DataMatrix& X, const Assignment& A,
                           const Centroids& previous, const WeightVector& W,
                           double lambda, int beta) {
    return means_with_repair(X, A, &previous, &W, lambda, beta);
}

WeightVector update_weights(const Eigen::VectorXd& dispersions, double alpha,
                            double lambda, int beta, Eigen::Index n, Eigen::Index p) {
    if (alpha < 0.0 || lambda < 0.0) {
        throw ValidationError("alpha/lambda", "must be nonnegative");
    }
    const double pp = static_cast<double>(p) * static_cast<double>(p);
    const double exponent = 1.0 / (beta - 1);
    Eigen::VectorXd w(dispersions.size());
    for (Eigen::Index l = 0; l < dispersions.size(); ++l) {
        if (dispersions[l] <= 0.0) {
            w[l] = 0.0;
            continue;
        }
        const double s =
            soft_threshold(static_cast<double>(n) * alpha / dispersions[l], lambda / pp);
        w[l] = std::pow(s / beta, exponent);
    }
    return WeightVector(std::move(w));
}

double alpha_from_dispersions(const Eigen::VectorXd& dispersions, Eigen::Index n,
                              int beta) {
    const double exponent = 1.0 / (beta - 1);
    double sum = 0.0;
    for (Eigen::Index l = 0; l < dispersions.size(); ++l) {
        if (dispersions[l] > 0.0) {
            sum += std::pow(static_cast<double>(n) / (beta * dispersions[l]), exponent);
        }
    }
    if (sum <= 0.0) {
        throw DegenerateDataError(
            "every per-feature dispersion is zero; no weight reward can be derived");
    }
    return std::pow(sum, -(beta - 1.0));
}

double select_alpha(const DataMatrix& X, int k, int beta) {
    X.validate();
    if (k < 2 || k > X.n()) {
        throw ValidationError("k", "cluster count must satisfy 2 <= k <= n");
    }
    if (beta < 2 || beta % 2 != 0) {
        throw ValidationError("beta", "exponent must be an even integer >= 2");
    }
    Eigen::VectorXd d(X.p());
    for (Eigen::Index l = 0; l < X.p(); ++l) {
        d[l] = kmeans1d_optimum(X.values.col(l), k);
    }
    return alpha_from_dispersions(d, X.n(), beta);
}

double objective(const DataMatrix& X, const Assignment& A, const Centroids& Z,
                 const WeightVector& W, double lambda, double alpha, int beta) {
    const Eigen::VectorXd d = compute_dispersions(X, A, Z);
    const Eigen::ArrayXd mult =
        penalty_multipliers(W, lambda, static_cast<int>(X.p()), beta);
    return (mult * d.array()).sum() / static_cast<double>(X.n()) -
           alpha * W.weights.sum();
}

double lambda_max_bound(const Eigen::VectorXd& dispersions, double alpha,
                        Eigen::Index n, Eigen::Index p) {
    double m = 0.0;
    for (Eigen::Index l = 0; l < dispersions.size(); ++l) {
        if (dispersions[l] > 0.0) {
            m = std::max(m, static_cast<double>(n) * alpha / dispersions[l]);
        }
    }
    return static_cast<double>(p) * static_cast<double>(p) * m;
}

double lambda_positive_weight_bound(const DataMatrix& X, int k, int beta) {
    const double alpha = select_alpha(X, k, beta);
    double max_var = 0.0;
    for (Eigen::Index l = 0; l < X.p(); ++l) {
        const double mean = X.values.col(l).mean();
        max_var = std::max(
            max_var, (X.values.col(l).array() - mean).square().mean());
    }
    if (max_var <= 0.0) {
        throw DegenerateDataError("every feature is constant");
    }
    const double pp = static_cast<double>(X.p()) * static_cast<double>(X.p());
    return 0.25 * alpha * pp / max_var;
}

FitResult fit(const DataMatrix& X, const LwkConfig& cfg_in) {
    const LwkConfig cfg = validate_config(cfg_in, X);
    const double alpha = cfg.alpha ? *cfg.alpha : select_alpha(X, cfg.k, cfg.beta);
    const Eigen::Index n = X.n();
    const Eigen::Index p = X.p();

    Rng rng(cfg.seed);
    const auto idx = rng.sample_without_replacement(n, cfg.k);
    Eigen::MatrixXd init(cfg.k, p);
    for (int j = 0; j < cfg.k; ++j) init.row(j) = X.values.row(idx[j]);
    Centroids Z(std::move(init));
    WeightVector W(Eigen::VectorXd::Constant(p, 1.0 / static_cast<double>(p)));
    Assignment U = update_assignments(X, Z, W, cfg.lambda, cfg.beta);

    FitResult res;
    res.alpha_used = alpha;
    res.objective_trace.push_back(objective(X, U, Z, W, cfg.lambda, alpha, cfg.beta));

    for (int iter = 0; iter < cfg.max_iter; ++iter) {
        const double before = res.objective_trace.back();
        Z = update_centroids(X, U, Z, W, cfg.lambda, cfg.beta);
        const Eigen::VectorXd d = compute_dispersions(X, U, Z);
        W = update_weights(d, alpha, cfg.lambda, cfg.beta, n, p);
        res.iterations = iter + 1;
        if ((W.weights.array() == 0.0).all()) {
            // All weights zeroed: every penalized distance is zero and the
            // next assignment would be arbitrary. Keep the current partition
            // and surface the over-penalization.
            res.degenerate = true;
            res.objective_trace.push_back(
                objective(X, U, Z, W, cfg.lambda, alpha, cfg.beta));
            break;
        }
        U = update_assignments(X, Z, W, cfg.lambda, cfg.beta);
        const double after = objective(X, U, Z, W, cfg.lambda, alpha, cfg.beta);
        res.objective_trace.push_back(after);
        if (std::abs(before - after) <= cfg.epsilon) {
            res.converged = true;
            break;
        }
    }

    res.assignment = std::move(U);
    res.centroids = std::move(Z);
    res.dispersions = compute_dispersions(X, res.assignment, res.centroids);
    res.weights = std::move(W);
    return res;
}

MultiFitResult best_of_restarts(int n_restarts, std::uint64_t seed,
                                const std::function<FitResult(std::uint64_t)>& single) {
    if (n_restarts < 1) {
        throw ValidationError("n_restarts", "restart count must be positive");
    }
    MultiFitResult out;
    out.restarts.resize(static_cast<std::size_t>(n_restarts));
    parallel_for(static_cast<std::size_t>(n_restarts), [&](std::size_t r) {
        out.restarts[r] = single(derive_seed(seed, r));
    });
    out.best_index = 0;
    for (int r = 1; r < n_restarts; ++r) {
        if (out.restarts[static_cast<std::size_t>(r)].final_objective() <
            out.restarts[static_cast<std::size_t>(out.best_index)].final_objective()) {
            out.best_index = r;
        }
    }
    out.best = out.restarts[static_cast<std::size_t>(out.best_index)];
    return out;
}

MultiFitResult fit_multi(const DataMatrix& X, const LwkConfig& cfg_in) {
    LwkConfig cfg = validate_config(cfg_in, X);
    if (!cfg.alpha) {
        cfg.alpha = select_alpha(X, cfg.k, cfg.beta);
    }
    return best_of_restarts(cfg.n_restarts, cfg.seed, [&](std::uint64_t s) {
        LwkConfig c = cfg;
        c.seed = s;
        return fit(X, c);
    });
}

}  // namespace lwk

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

#include "lwk/baselines.hpp"

#include "lwk/lwkmeans.hpp"
#include "lwk/rng.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace lwk {

namespace {

Assignment assign_by_multiplier(const DataMatrix& X, const Centroids& Z,
                                const Eigen::ArrayXd& mult) {
    const Eigen::Index n = X.n();
    const int k = static_cast<int>(Z.k());
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

Centroids means_with_repair(const DataMatrix& X, const Assignment& A,
                            const Centroids& previous, const Eigen::ArrayXd& mult) {
    const Eigen::Index p = X.p();
    Eigen::MatrixXd centers = Eigen::MatrixXd::Zero(A.k, p);
    Eigen::VectorXi counts = Eigen::VectorXi::Zero(A.k);
    for (Eigen::Index i = 0; i < X.n(); ++i) {
        centers.row(A.labels[i]) += X.values.row(i);
        counts[A.labels[i]] += 1;
    }
    std::vector<Eigen::Index> taken;
    for (int j = 0; j < A.k; ++j) {
        if (counts[j] > 0) {
            centers.row(j) /= static_cast<double>(counts[j]);
            continue;
        }
        double best_dist = -1.0;
        Eigen::Index best_i = 0;
        for (Eigen::Index i = 0; i < X.n(); ++i) {
            bool used = false;
            for (const Eigen::Index t : taken) used = used || (t == i);
            if (used) continue;
            const auto diff = (X.values.row(i) - previous.centers.row(j)).array();
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

Centroids random_rows(const DataMatrix& X, int k, Rng& rng) {
    const auto idx = rng.sample_without_replacement(X.n(), k);
    Eigen::MatrixXd init(k, X.p());
    for (int j = 0; j < k; ++j) init.row(j) = X.values.row(idx[j]);
    return Centroids(std::move(init));
}

void check_common(const DataMatrix& X, int k, double epsilon, int max_iter) {
    X.validate();
    if (k < 1 || k > X.n()) {
        throw ValidationError("k", "cluster count must satisfy 1 <= k <= n");
    }
    if (!(epsilon > 0.0)) {
        throw ValidationError("epsilon", "convergence tolerance must be positive");
    }
    if (max_iter < 1) throw ValidationError("max_iter", "iteration cap must be positive");
}

}  // namespace

FitResult fit_kmeans(const DataMatrix& X, int k, double epsilon, int max_iter,
                     std::uint64_t seed) {
    check_common(X, k, epsilon, max_iter);
    const Eigen::ArrayXd mult = Eigen::ArrayXd::Ones(X.p());

    Rng rng(seed);
    Centroids Z = random_rows(X, k, rng);
    Assignment U = assign_by_multiplier(X, Z, mult);

    FitResult res;
    res.objective_trace.push_back(compute_dispersions(X, U, Z).sum());
    for (int iter = 0; iter < max_iter; ++iter) {
        const double before = res.objective_trace.back();
        Z = means_with_repair(X, U, Z, mult);
        U = assign_by_multiplier(X, Z, mult);
        const double after = compute_dispersions(X, U, Z).sum();
        res.objective_trace.push_back(after);
        res.iterations = iter + 1;
        if (std::abs(before - after) <= epsilon) {
            res.converged = true;
            break;
        }
    }
    res.dispersions = compute_dispersions(X, U, Z);
    res.assignment = std::move(U);
    res.centroids = std::move(Z);
    res.weights = WeightVector(Eigen::VectorXd::Ones(X.p()));
    return res;
}

FitResult fit_wkmeans(const DataMatrix& X, int k, int beta, double epsilon,
                      int max_iter, std::uint64_t seed) {
    check_common(X, k, epsilon, max_iter);
    if (beta < 2 || beta % 2 != 0) {
        throw ValidationError("beta", "exponent must be an even integer >= 2");
    }
    const Eigen::Index p = X.p();
    const double inv_exp = 1.0 / (beta - 1);

    auto weight_step = [&](const Eigen::VectorXd& d) {
        Eigen::VectorXd w = Eigen::VectorXd::Zero(p);
        std::vector<Eigen::Index> zeros;
        for (Eigen::Index l = 0; l < p; ++l) {
            if (d[l] <= 0.0) zeros.push_back(l);
        }
        if (!zeros.empty()) {
            // Limit of the formula as D_l -> 0+: zero-dispersion features
            // absorb the whole unit mass equally.
            for (const Eigen::Index l : zeros) w[l] = 1.0 / static_cast<double>(zeros.size());
            return WeightVector(std::move(w));
        }
        Eigen::ArrayXd score(p);
        for (Eigen::Index l = 0; l < p; ++l) score[l] = std::pow(1.0 / d[l], inv_exp);
        w = (score / score.sum()).matrix();
        return WeightVector(std::move(w));
    };
    auto wk_multiplier = [&](const WeightVector& w) {
        return w.weights.array().pow(beta).eval();
    };
    auto wk_objective = [&](const WeightVector& w, const Eigen::VectorXd& d) {
        return (wk_multiplier(w) * d.array()).sum();
    };

    Rng rng(seed);
    Centroids Z = random_rows(X, k, rng);
    WeightVector W(Eigen::VectorXd::Constant(p, 1.0 / static_cast<double>(p)));
    Assignment U = assign_by_multiplier(X, Z, wk_multiplier(W));

    FitResult res;
    res.objective_trace.push_back(wk_objective(W, compute_dispersions(X, U, Z)));
    for (int iter = 0; iter < max_iter; ++iter) {
        const double before = res.objective_trace.back();
        Z = means_with_repair(X, U, Z, wk_multiplier(W));
        W = weight_step(compute_dispersions(X, U, Z));
        U = assign_by_multiplier(X, Z, wk_multiplier(W));
        const double after = wk_objective(W, compute_dispersions(X, U, Z));
        res.objective_trace.push_back(after);
        res.iterations = iter + 1;
        if (std::abs(before - after) <= epsilon) {
            res.converged = true;
            break;
        }
    }
    res.dispersions = compute_dispersions(X, U, Z);
    res.assignment = std::move(U);
    res.centroids = std::move(Z);
    res.weights = std::move(W);
    return res;
}

Eigen::VectorXd sparse_weight_update(const Eigen::VectorXd& scores, double s) {
    const Eigen::Index p = scores.size();
    if (!(s > 1.0) || s > std::sqrt(static_cast<double>(p)) + 1e-12) {
        throw ValidationError("s", "L1 bound must satisfy 1 < s <= sqrt(p)");
    }
    if ((scores.array() <= 0.0).all()) {
        throw DegenerateDataError(
            "every between-cluster score is nonpositive; weights are undefined");
    }
    auto thresholded = [&](double delta) {
        Eigen::VectorXd u = (scores.array() - delta).cwiseMax(0.0).matrix();
        const double norm = u.norm();
        return Eigen::VectorXd(u / norm);
    };
    Eigen::VectorXd w = thresholded(0.0);
    if (w.lpNorm<1>() <= s) return w;

    // An L1 budget within 1e-3 of one admits only a sliver beyond a single
    // coordinate; the top-scoring feature alone is optimal to that order.
    if (s - 1.0 <= 1e-3) {
        Eigen::Index top = 0;
        scores.maxCoeff(&top);
        Eigen::VectorXd single = Eigen::VectorXd::Zero(p);
        single[top] = 1.0;
        return single;
    }

    double lo = 0.0;
    double hi = scores.maxCoeff();
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        w = thresholded(mid);
        const double l1 = w.lpNorm<1>();
        if (l1 > s) {
            lo = mid;
        } else {
            hi = mid;
        }
        if (hi - lo <= 1e-14 * std::max(1.0, scores.maxCoeff())) break;
    }
    return thresholded(hi);
}

FitResult fit_sparse_kmeans(const DataMatrix& X, const SparseKmConfig& cfg) {
    check_common(X, cfg.k, cfg.epsilon, cfg.max_iter);
    if (cfg.k < 2) throw ValidationError("k", "cluster count must be >= 2");
    const Eigen::Index p = X.p();
    if (!(cfg.s > 1.0) || cfg.s > std::sqrt(static_cast<double>(p)) + 1e-12) {
        throw ValidationError("s", "L1 bound must satisfy 1 < s <= sqrt(p)");
    }

    Eigen::VectorXd total(p);
    for (Eigen::Index l = 0; l < p; ++l) {
        const double mean = X.values.col(l).mean();
        total[l] = (X.values.col(l).array() - mean).square().sum();
    }

    Rng rng(cfg.seed);
    WeightVector W(
        Eigen::VectorXd::Constant(p, 1.0 / std::sqrt(static_cast<double>(p))));
    Centroids Z = random_rows(X, cfg.k, rng);
    Assignment U = assign_by_multiplier(X, Z, W.weights.array());

    FitResult res;
    auto lloyd = [&]() {
        // Weighted Lloyd to a fixed partition, warm-started from (U, Z).
        for (int it = 0; it < cfg.max_iter; ++it) {
            Z = means_with_repair(X, U, Z, W.weights.array());
            Assignment next = assign_by_multiplier(X, Z, W.weights.array());
            const bool same = (next.labels.array() == U.labels.array()).all();
            U = std::move(next);
            if (same) break;
        }
    };
    auto between_scores = [&]() {
        return Eigen::VectorXd(total - compute_dispersions(X, U, Z));
    };

    lloyd();
    Eigen::VectorXd a = between_scores();
    res.objective_trace.push_back(-W.weights.dot(a));
    for (int iter = 0; iter < cfg.max_iter; ++iter) {
        const Eigen::VectorXd w_prev = W.weights;
        W = WeightVector(sparse_weight_update(a, cfg.s));
        lloyd();
        a = between_scores();
        res.objective_trace.push_back(-W.weights.dot(a));
        res.iterations = iter + 1;
        const double change =
            (W.weights - w_prev).lpNorm<1>() / std::max(w_prev.lpNorm<1>(), 1e-300);
        if (change < cfg.epsilon) {
            res.converged = true;
            break;
        }
    }
    res.dispersions = compute_dispersions(X, U, Z);
    res.assignment = std::move(U);
    res.centroids = std::move(Z);
    res.weights = std::move(W);
    return res;
}

}  // namespace lwk

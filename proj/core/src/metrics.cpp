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

#include "lwk/metrics.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace lwk {

namespace {

// Minimum-cost square assignment via shortest augmenting paths with
// potentials. Returns the assigned total cost.
double hungarian_min_cost(const Eigen::MatrixXd& cost) {
    const int m = static_cast<int>(cost.rows());
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> u(m + 1, 0.0), v(m + 1, 0.0);
    std::vector<int> match(m + 1, 0), way(m + 1, 0);
    for (int i = 1; i <= m; ++i) {
        match[0] = i;
        int j0 = 0;
        std::vector<double> minv(m + 1, inf);
        std::vector<char> used(m + 1, 0);
        do {
            used[j0] = 1;
            const int i0 = match[j0];
            int j1 = -1;
            double delta = inf;
            for (int j = 1; j <= m; ++j) {
                if (used[j]) continue;
                const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const int j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    double total = 0.0;
    for (int j = 1; j <= m; ++j) total += cost(match[j] - 1, j - 1);
    return total;
}

Eigen::MatrixXd confusion(const Assignment& a, const Assignment& b) {
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(a.k, b.k);
    for (Eigen::Index i = 0; i < a.n(); ++i) c(a.labels[i], b.labels[i]) += 1.0;
    return c;
}

void check_lengths(const Assignment& a, const Assignment& b) {
    if (a.n() != b.n()) {
        throw ValidationError("assignments", "partitions cover different point counts");
    }
}

double choose2(double m) { return m * (m - 1.0) / 2.0; }

}  // namespace

int RelevanceVector::count() const {
    int c = 0;
    for (const auto b : bits) c += b ? 1 : 0;
    return c;
}

double cer(const Assignment& a, const Assignment& b) {
    check_lengths(a, b);
    const Eigen::MatrixXd conf = confusion(a, b);
    const int m = std::max(a.k, b.k);
    Eigen::MatrixXd agree = Eigen::MatrixXd::Zero(m, m);
    agree.topLeftCorner(a.k, b.k) = conf;
    // Maximizing agreement == minimizing (max - agreement).
    const double top = agree.maxCoeff();
    const Eigen::MatrixXd cost = Eigen::MatrixXd::Constant(m, m, top) - agree;
    const double matched = top * m - hungarian_min_cost(cost);
    return 1.0 - matched / static_cast<double>(a.n());
}

double cer_pairwise(const Assignment& a, const Assignment& b) {
    check_lengths(a, b);
    const Eigen::Index n = a.n();
    if (n < 2) return 0.0;
    const Eigen::MatrixXd conf = confusion(a, b);
    double same_a = 0.0, same_b = 0.0, same_both = 0.0;
    for (Eigen::Index i = 0; i < conf.rows(); ++i) same_a += choose2(conf.row(i).sum());
    for (Eigen::Index j = 0; j < conf.cols(); ++j) same_b += choose2(conf.col(j).sum());
    for (Eigen::Index i = 0; i < conf.rows(); ++i) {
        for (Eigen::Index j = 0; j < conf.cols(); ++j) same_both += choose2(conf(i, j));
    }
    const double disagree = same_a + same_b - 2.0 * same_both;
    return disagree / choose2(static_cast<double>(n));
}

RelevanceVector relevance_from_weights(const WeightVector& w) {
    RelevanceVector out;
    out.bits.resize(static_cast<std::size_t>(w.p()));
    for (Eigen::Index l = 0; l < w.p(); ++l) {
        out.bits[static_cast<std::size_t>(l)] = w.weights[l] > 0.0 ? 1 : 0;
    }
    return out;
}

double mcc(const RelevanceVector& truth, const RelevanceVector& pred) {
    if (truth.bits.size() != pred.bits.size()) {
        throw ValidationError("relevance", "vectors have different lengths");
    }
    double tp = 0.0, tn = 0.0, fp = 0.0, fn = 0.0;
    for (std::size_t l = 0; l < truth.bits.size(); ++l) {
        const bool t = truth.bits[l] != 0;
        const bool q = pred.bits[l] != 0;
        if (t && q) tp += 1.0;
        else if (!t && !q) tn += 1.0;
        else if (!t && q) fp += 1.0;
        else fn += 1.0;
    }
    const double denom = (tp + fp) * (tp + fn) * (tn + fp) * (tn + fn);
    if (denom <= 0.0) return 0.0;
    return (tp * tn - fp * fn) / std::sqrt(denom);
}

DispersionSummary feature_dispersion_summary(const DataMatrix& X, const Assignment& A) {
    if (A.n() != X.n()) {
        throw ValidationError("assignment", "label count does not match observations");
    }
    const Eigen::Index p = X.p();
    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(A.k, p);
    Eigen::VectorXi counts = Eigen::VectorXi::Zero(A.k);
    for (Eigen::Index i = 0; i < X.n(); ++i) {
        sums.row(A.labels[i]) += X.values.row(i);
        counts[A.labels[i]] += 1;
    }
    for (int j = 0; j < A.k; ++j) {
        if (counts[j] > 0) sums.row(j) /= static_cast<double>(counts[j]);
    }
    DispersionSummary out;
    out.within = Eigen::VectorXd::Zero(p);
    for (Eigen::Index i = 0; i < X.n(); ++i) {
        const auto diff = X.values.row(i) - sums.row(A.labels[i]);
        out.within += diff.array().square().matrix().transpose();
    }
    out.total.resize(p);
    for (Eigen::Index l = 0; l < p; ++l) {
        const double mean = X.values.col(l).mean();
        out.total[l] = (X.values.col(l).array() - mean).square().sum();
    }
    return out;
}

}  // namespace lwk

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

// Test-only oracles, independent of the library's solution paths: a scalar
// brute-force minimizer for the weight subproblem, a permutation matcher for
// CER, a dense-grid maximizer for the sparse weight step, distribution CDFs
// for KS smoke tests, and a reference 1-D k-means DP.

#ifndef LWK_TESTS_HELPERS_HPP
#define LWK_TESTS_HELPERS_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

namespace lwk::testing {

// Golden-section minimization of a unimodal function on [lo, hi].
inline double golden_section_min(const std::function<double(double)>& f, double lo,
                                 double hi, int iters = 200) {
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - phi * (b - a);
    double d = a + phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < iters && (b - a) > 1e-14 * std::max(1.0, std::abs(b)); ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

// Brute-force minimizer of the one-feature penalized weight objective
//   g(w) = (1/n) w^beta D - alpha w + (lambda/(n p^2)) w D   over w >= 0,
// by coarse grid plus golden-section refinement around the best cell.
inline double scalar_weight_oracle(double n, double D, double alpha, double lambda,
                                   double p, int beta) {
    const auto g = [&](double w) {
        return std::pow(w, beta) * D / n - alpha * w + lambda / (n * p * p) * w * D;
    };
    // Any minimizer satisfies beta*w^(beta-1)*D/n <= alpha, giving this cap.
    double cap = std::pow(n * alpha / (beta * D), 1.0 / (beta - 1));
    if (!std::isfinite(cap)) cap = 0.0;
    const double hi = std::max(cap * 2.0, 1e-9);
    const int cells = 4000;
    double best_w = 0.0;
    double best_g = g(0.0);
    for (int i = 1; i <= cells; ++i) {
        const double w = hi * i / cells;
        const double v = g(w);
        if (v < best_g) {
            best_g = v;
            best_w = w;
        }
    }
    const double lo = std::max(0.0, best_w - hi / cells);
    const double up = std::min(hi, best_w + hi / cells);
    const double refined = golden_section_min(g, lo, up);
    return g(refined) < best_g ? refined : best_w;
}

// Maximum agreement between two label vectors over injective cluster
// matchings, by enumerating all permutations of the larger side.
inline double cer_bruteforce(const Eigen::VectorXi& a, int ka,
                             const Eigen::VectorXi& b, int kb) {
    const int m = std::max(ka, kb);
    Eigen::MatrixXd conf = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index i = 0; i < a.size(); ++i) conf(a[i], b[i]) += 1.0;
    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) perm[static_cast<std::size_t>(i)] = i;
    double best = 0.0;
    do {
        double agree = 0.0;
        for (int i = 0; i < m; ++i) agree += conf(i, perm[static_cast<std::size_t>(i)]);
        best = std::max(best, agree);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return 1.0 - best / static_cast<double>(a.size());
}

// Angular half of the sparse-weights oracle: every boundary point of the
// feasible set is the radial image of a point on the unit sphere's positive
// orthant, so search over p-1 angles in [0, pi/2], scaling each sphere point
// back onto the L1 ball when needed, with a dense grid plus recursive
// zooming around the best cell.
inline double sparse_weights_angular_search(const Eigen::VectorXd& scores, double s,
                                            int initial_steps = 0) {
    const int p = static_cast<int>(scores.size());
    const int angles = p - 1;
    if (angles == 0) return std::max(scores[0], 0.0);

    const auto value_at = [&](const std::vector<double>& theta) {
        double sin_prod = 1.0;
        double obj = 0.0;
        double l1 = 0.0;
        for (int l = 0; l < p; ++l) {
            const double w =
                l < angles ? sin_prod * std::cos(theta[static_cast<std::size_t>(l)])
                           : sin_prod;
            if (l < angles) sin_prod *= std::sin(theta[static_cast<std::size_t>(l)]);
            obj += w * scores[l];
            l1 += w;
        }
        return obj * std::min(1.0, s / l1);
    };

    const double half_pi = std::asin(1.0);
    int steps = initial_steps;
    if (steps <= 0) steps = angles == 1 ? 2000 : (angles == 2 ? 250 : 50);

    std::vector<double> theta(static_cast<std::size_t>(angles), 0.0);
    std::vector<double> best_theta = theta;
    double best = -std::numeric_limits<double>::infinity();
    std::vector<int> idx(static_cast<std::size_t>(angles), 0);
    for (;;) {
        for (int l = 0; l < angles; ++l) {
            theta[static_cast<std::size_t>(l)] =
                half_pi * idx[static_cast<std::size_t>(l)] / steps;
        }
        const double v = value_at(theta);
        if (v > best) {
            best = v;
            best_theta = theta;
        }
        int c = 0;
        while (c < angles) {
            if (++idx[static_cast<std::size_t>(c)] <= steps) break;
            idx[static_cast<std::size_t>(c)] = 0;
            ++c;
        }
        if (c == angles) break;
    }

    double radius = half_pi / steps;
    for (int round = 0; round < 60; ++round) {
        std::vector<int> offset(static_cast<std::size_t>(angles), 0);
        std::vector<double> center = best_theta;
        for (;;) {
            for (int l = 0; l < angles; ++l) {
                const double t = center[static_cast<std::size_t>(l)] +
                                 radius * (offset[static_cast<std::size_t>(l)] - 3) / 3.0;
                theta[static_cast<std::size_t>(l)] = std::clamp(t, 0.0, half_pi);
            }
            const double v = value_at(theta);
            if (v > best) {
                best = v;
                best_theta = theta;
            }
            int c = 0;
            while (c < angles) {
                if (++offset[static_cast<std::size_t>(c)] <= 6) break;
                offset[static_cast<std::size_t>(c)] = 0;
                ++c;
            }
            if (c == angles) break;
        }
        radius *= 0.5;
    }
    return std::max(best, 0.0);
}

// Cartesian half of the oracle: a lattice of directions in [0,1]^p, each
// pushed radially to the feasible boundary, with multi-resolution pattern
// search from the strongest cells.
inline double sparse_weights_lattice_search(const Eigen::VectorXd& scores, double s,
                                            int steps = 40) {
    const int p = static_cast<int>(scores.size());
    const auto boundary_value = [&](const Eigen::VectorXd& u) {
        const double n2 = u.norm();
        if (n2 <= 0.0) return 0.0;
        return std::min(1.0 / n2, s / u.lpNorm<1>()) * u.dot(scores);
    };

    std::vector<std::pair<double, Eigen::VectorXd>> cells;
    std::vector<int> idx(static_cast<std::size_t>(p), 0);
    for (;;) {
        Eigen::VectorXd u(p);
        for (int l = 0; l < p; ++l) {
            u[l] = static_cast<double>(idx[static_cast<std::size_t>(l)]) / steps;
        }
        cells.emplace_back(boundary_value(u), u);
        int c = 0;
        while (c < p) {
            if (++idx[static_cast<std::size_t>(c)] <= steps) break;
            idx[static_cast<std::size_t>(c)] = 0;
            ++c;
        }
        if (c == p) break;
    }
    const std::size_t starts = std::min<std::size_t>(cells.size(), 200);
    std::partial_sort(cells.begin(), cells.begin() + static_cast<long>(starts), cells.end(),
                      [](const auto& x, const auto& y) { return x.first > y.first; });

    double best = 0.0;
    for (std::size_t start = 0; start < starts; ++start) {
        Eigen::VectorXd cur = cells[start].second;
        double cur_v = cells[start].first;
        for (double h = 1.0 / steps; h > 1e-10; h *= 0.5) {
            for (int pass = 0; pass < 100; ++pass) {
                bool improved = false;
                std::vector<int> offset(static_cast<std::size_t>(p), 0);
                for (;;) {
                    Eigen::VectorXd u = cur;
                    for (int l = 0; l < p; ++l) {
                        u[l] = std::max(
                            0.0, u[l] + h * (offset[static_cast<std::size_t>(l)] - 1));
                    }
                    const double v = boundary_value(u);
                    if (v > cur_v) {
                        cur_v = v;
                        cur = u;
                        improved = true;
                    }
                    int c = 0;
                    while (c < p) {
                        if (++offset[static_cast<std::size_t>(c)] <= 2) break;
                        offset[static_cast<std::size_t>(c)] = 0;
                        ++c;
                    }
                    if (c == p) break;
                }
                if (!improved) break;
            }
        }
        best = std::max(best, cur_v);
    }
    return best;
}

// Random-direction polish in w space. Feasibility is restored by radial
// scaling; for a linear objective over this convex body every suboptimal
// point has a positive-measure cone of improving directions, so random
// proposals cannot stall where a lattice stencil can.
inline double sparse_weights_random_polish(const Eigen::VectorXd& scores, double s,
                                           double start_value) {
    const int p = static_cast<int>(scores.size());
    const auto feasible_value = [&](Eigen::VectorXd u) {
        for (int l = 0; l < p; ++l) u[l] = std::max(u[l], 0.0);
        const double n2 = u.norm();
        if (n2 <= 0.0) return std::pair<double, Eigen::VectorXd>(0.0, u);
        const double r = std::min(1.0 / n2, s / u.lpNorm<1>());
        u *= r;
        return std::pair<double, Eigen::VectorXd>(u.dot(scores), u);
    };

    // Start from the best single coordinate; the climb does the rest. The
    // caller keeps the max with the other searches, so only this walk's own
    // value is tracked here.
    (void)start_value;
    Eigen::Index top = 0;
    scores.maxCoeff(&top);
    Eigen::VectorXd cur = Eigen::VectorXd::Zero(p);
    cur[top] = 1.0;
    double cur_v = scores[top];

    std::uint64_t state = 0x9e3779b97f4a7c15ULL;
    const auto next_gaussian_ish = [&]() {
        // Sum of three uniforms, centered: light-tailed, symmetric, cheap.
        double acc = 0.0;
        for (int i = 0; i < 3; ++i) {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            acc += static_cast<double>(state >> 11) * 0x1.0p-53;
        }
        return acc - 1.5;
    };

    for (double radius = 0.5; radius > 1e-9; radius *= 0.5) {
        for (int trial = 0; trial < 4000; ++trial) {
            Eigen::VectorXd proposal = cur;
            for (int l = 0; l < p; ++l) proposal[l] += radius * next_gaussian_ish();
            const auto [v, u] = feasible_value(std::move(proposal));
            if (v > cur_v) {
                cur_v = v;
                cur = u;
            }
        }
    }
    return cur_v;
}

// Exhaustive maximizer of dot(w, scores) over ||w||_2 <= 1, ||w||_1 <= s,
// w >= 0: independent derivative-free searches in different
// parametrizations, so a stall in one chart cannot go unnoticed.
inline double sparse_weights_grid_oracle(const Eigen::VectorXd& scores, double s) {
    const double coarse = std::max(sparse_weights_angular_search(scores, s),
                                   sparse_weights_lattice_search(scores, s));
    return std::max(coarse, sparse_weights_random_polish(scores, s, coarse));
}

// Reference O(k n^2) DP for 1-D k-means, for cross-checking the fast version.
inline double kmeans1d_reference(std::vector<double> xs, int k) {
    std::sort(xs.begin(), xs.end());
    const int n = static_cast<int>(xs.size());
    if (k >= n) return 0.0;
    std::vector<double> ps(n + 1, 0.0), ps2(n + 1, 0.0);
    for (int i = 0; i < n; ++i) {
        ps[i + 1] = ps[i] + xs[static_cast<std::size_t>(i)];
        ps2[i + 1] = ps2[i] + xs[static_cast<std::size_t>(i)] * xs[static_cast<std::size_t>(i)];
    }
    const auto cost = [&](int i, int j) {
        const double m = j - i + 1;
        const double sum = ps[j + 1] - ps[i];
        return std::max(0.0, ps2[j + 1] - ps2[i] - sum * sum / m);
    };
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<double> prev(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) prev[static_cast<std::size_t>(j)] = cost(0, j);
    for (int c = 2; c <= k; ++c) {
        std::vector<double> cur(static_cast<std::size_t>(n), inf);
        for (int j = c - 1; j < n; ++j) {
            for (int i = c - 1; i <= j; ++i) {
                cur[static_cast<std::size_t>(j)] =
                    std::min(cur[static_cast<std::size_t>(j)],
                             prev[static_cast<std::size_t>(i - 1)] + cost(i, j));
            }
        }
        prev = cur;
    }
    return prev[static_cast<std::size_t>(n - 1)];
}

// Regularized lower incomplete gamma P(a, x), series and continued fraction.
inline double gamma_p(double a, double x) {
    if (x < 0.0 || a <= 0.0) return 0.0;
    if (x == 0.0) return 0.0;
    const double gln = std::lgamma(a);
    if (x < a + 1.0) {
        double ap = a;
        double sum = 1.0 / a;
        double del = sum;
        for (int i = 0; i < 500; ++i) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::abs(del) < std::abs(sum) * 1e-15) break;
        }
        return sum * std::exp(-x + a * std::log(x) - gln);
    }
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-15) break;
    }
    const double q = std::exp(-x + a * std::log(x) - gln) * h;
    return 1.0 - q;
}

inline double normal_cdf(double x, double mean, double sd) {
    return 0.5 * std::erfc(-(x - mean) / (sd * std::sqrt(2.0)));
}

inline double chisq_cdf(double x, int df) { return gamma_p(df / 2.0, x / 2.0); }

inline double uniform_cdf(double x, double a, double b) {
    if (x <= a) return 0.0;
    if (x >= b) return 1.0;
    return (x - a) / (b - a);
}

inline double ks_statistic(std::vector<double> sample,
                           const std::function<double(double)>& cdf) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = cdf(sample[i]);
        d = std::max(d, std::abs(f - static_cast<double>(i) / n));
        d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
    }
    return d;
}

}  // namespace lwk::testing

#endif  // LWK_TESTS_HELPERS_HPP

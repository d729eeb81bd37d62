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

#include "lwk/datagen.hpp"

#include "lwk/rng.hpp"

#include <cmath>

namespace lwk {

bool operator==(const NormalDist& x, const NormalDist& y) {
    return x.mean == y.mean && x.sd == y.sd;
}
bool operator==(const UniformDist& x, const UniformDist& y) {
    return x.a == y.a && x.b == y.b;
}
bool operator==(const ChiSqDist& x, const ChiSqDist& y) { return x.df == y.df; }

namespace {

void validate_dist(const FeatureDist& d) {
    if (const auto* normal = std::get_if<NormalDist>(&d)) {
        if (!(normal->sd > 0.0) || !std::isfinite(normal->sd) ||
            !std::isfinite(normal->mean)) {
            throw ValidationError("normal", "need finite mean and sd > 0");
        }
    } else if (const auto* uniform = std::get_if<UniformDist>(&d)) {
        if (!(uniform->a < uniform->b) || !std::isfinite(uniform->a) ||
            !std::isfinite(uniform->b)) {
            throw ValidationError("uniform", "need finite bounds with a < b");
        }
    } else if (const auto* chisq = std::get_if<ChiSqDist>(&d)) {
        if (chisq->df < 1) {
            throw ValidationError("chisq", "degrees of freedom must be >= 1");
        }
    }
}

double draw(Rng& rng, const FeatureDist& d) {
    if (const auto* normal = std::get_if<NormalDist>(&d)) {
        return rng.normal(normal->mean, normal->sd);
    }
    if (const auto* uniform = std::get_if<UniformDist>(&d)) {
        return rng.uniform(uniform->a, uniform->b);
    }
    return rng.chisq(std::get<ChiSqDist>(d).df);
}

GenSpec block_spec(std::string scheme, std::uint64_t seed,
                   std::vector<ClusterSpec> clusters) {
    GenSpec spec;
    spec.scheme = std::move(scheme);
    spec.seed = seed;
    spec.clusters = std::move(clusters);
    return spec;
}

}  // namespace

void GenSpec::validate() const {
    if (clusters.empty()) throw ValidationError("clusters", "need at least one cluster");
    const std::size_t p = clusters.front().features.size();
    if (p == 0) throw ValidationError("features", "need at least one feature");
    for (const auto& c : clusters) {
        if (c.count < 1) throw ValidationError("count", "cluster sample count must be >= 1");
        if (c.features.size() != p) {
            throw ValidationError("features", "clusters declare differing feature counts");
        }
        for (const auto& f : c.features) validate_dist(f);
    }
}

Dataset gen_mixture(const GenSpec& spec) {
    spec.validate();
    const Eigen::Index p = static_cast<Eigen::Index>(spec.clusters.front().features.size());
    Eigen::Index n = 0;
    for (const auto& c : spec.clusters) n += c.count;

    Rng rng(spec.seed);
    Eigen::MatrixXd values(n, p);
    Eigen::VectorXi labels(n);
    Eigen::Index row = 0;
    for (std::size_t c = 0; c < spec.clusters.size(); ++c) {
        const auto& cluster = spec.clusters[c];
        for (int i = 0; i < cluster.count; ++i) {
            for (Eigen::Index l = 0; l < p; ++l) {
                values(row, l) = draw(rng, cluster.features[static_cast<std::size_t>(l)]);
            }
            labels[row] = static_cast<int>(c);
            ++row;
        }
    }

    Dataset out;
    out.data = DataMatrix(std::move(values));
    out.truth = Assignment(std::move(labels), static_cast<int>(spec.clusters.size()));
    out.relevance.bits.resize(static_cast<std::size_t>(p));
    for (Eigen::Index l = 0; l < p; ++l) {
        const auto& first = spec.clusters.front().features[static_cast<std::size_t>(l)];
        bool uniform_across = true;
        for (const auto& c : spec.clusters) {
            uniform_across =
                uniform_across && (c.features[static_cast<std::size_t>(l)] == first);
        }
        out.relevance.bits[static_cast<std::size_t>(l)] = uniform_across ? 0 : 1;
    }
    return out;
}

Dataset gen_example1(std::uint64_t seed) {
    std::vector<ClusterSpec> clusters = {
        {100, {NormalDist{0.0, 1.0}, NormalDist{0.0, 1.0}}},
        {100, {NormalDist{7.0, 1.0}, NormalDist{2.0, 1.0}}},
        {100, {NormalDist{13.0, 1.0}, NormalDist{-2.0, 1.0}}},
        {100, {NormalDist{19.0, 1.0}, UniformDist{-10.0, 10.0}}},
    };
    Dataset out = gen_mixture(block_spec("example1", seed, std::move(clusters)));
    // Feature 2 varies across clusters but does not delineate them.
    out.relevance.bits = {1, 0};
    return out;
}

Dataset gen_example2(std::uint64_t seed, int p_signal, int p_noise) {
    if (p_signal < 1) throw ValidationError("p_signal", "need at least one signal feature");
    if (p_noise < 0) throw ValidationError("p_noise", "noise feature count must be >= 0");
    const double means[3] = {0.0, 5.0, 10.0};
    std::vector<ClusterSpec> clusters(3);
    for (int c = 0; c < 3; ++c) {
        clusters[static_cast<std::size_t>(c)].count = 100;
        auto& feats = clusters[static_cast<std::size_t>(c)].features;
        feats.reserve(static_cast<std::size_t>(p_signal + p_noise));
        for (int l = 0; l < p_signal; ++l) feats.push_back(NormalDist{means[c], 1.0});
        for (int l = 0; l < p_noise; ++l) feats.push_back(ChiSqDist{5});
    }
    return gen_mixture(block_spec("example2", seed, std::move(clusters)));
}

Dataset gen_data1_analog(std::uint64_t seed) {
    std::vector<ClusterSpec> clusters = {
        {100, {NormalDist{0.0, 0.5}, NormalDist{0.0, 0.5}}},
        {100, {NormalDist{5.0, 0.5}, NormalDist{0.0, 0.5}}},
        {100, {NormalDist{10.0, 0.5}, UniformDist{-100.0, 100.0}}},
    };
    Dataset out = gen_mixture(block_spec("data1", seed, std::move(clusters)));
    out.relevance.bits = {1, 0};
    return out;
}

Dataset gen_toy1_analog(std::uint64_t seed) {
    const double means[3] = {0.0, 6.0, 12.0};
    std::vector<ClusterSpec> clusters(3);
    for (int c = 0; c < 3; ++c) {
        clusters[static_cast<std::size_t>(c)].count = 100;
        auto& feats = clusters[static_cast<std::size_t>(c)].features;
        for (int l = 0; l < 4; ++l) feats.push_back(NormalDist{means[c], 1.0});
        for (int l = 4; l < 10; ++l) feats.push_back(NormalDist{0.0, 1.0});
    }
    return gen_mixture(block_spec("toy1", seed, std::move(clusters)));
}

}  // namespace lwk

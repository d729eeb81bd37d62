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

#ifndef LWK_DATAGEN_HPP
#define LWK_DATAGEN_HPP

#include "lwk/metrics.hpp"
#include "lwk/types.hpp"

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace lwk {

struct NormalDist {
    double mean = 0.0;
    double sd = 1.0;
};
struct UniformDist {
    double a = 0.0;
    double b = 1.0;
};
struct ChiSqDist {
    int df = 1;
};
using FeatureDist = std::variant<NormalDist, UniformDist, ChiSqDist>;

bool operator==(const NormalDist& x, const NormalDist& y);
bool operator==(const UniformDist& x, const UniformDist& y);
bool operator==(const ChiSqDist& x, const ChiSqDist& y);

/// Per-cluster sample count plus one distribution per feature.
struct ClusterSpec {
    int count = 0;
    std::vector<FeatureDist> features;
};

/// A full mixture recipe. Every cluster must declare the same number of
/// features; generation is deterministic given the seed.
struct GenSpec {
    std::string scheme = "mixture";
    std::uint64_t seed = 0;
    std::vector<ClusterSpec> clusters;

    void validate() const;
};

struct Dataset {
    DataMatrix data;
    Assignment truth;
    RelevanceVector relevance;
};

/// Generic mixture sampler. Truth labels follow the cluster blocks exactly;
/// the relevance vector marks a feature as informative iff its distribution
/// is not identical across all clusters.
Dataset gen_mixture(const GenSpec& spec);

/// Four clusters of 100 points in two features. Feature 1 separates the
/// clusters (means 0/7/13/19, unit variance); feature 2 is N(0,1), N(2,1),
/// N(-2,1) and Unif(-10,10) by cluster and carries no usable structure, so
/// the shipped relevance vector is (1, 0).
Dataset gen_example1(std::uint64_t seed);

/// Three clusters of 100 points. The first p_signal features have cluster
/// means 0/5/10 with unit variance; the remaining p_noise features are
/// chi-square(5) in every cluster.
Dataset gen_example2(std::uint64_t seed, int p_signal = 50, int p_noise = 950);

/// Two compact clusters and one cluster elongated along the second feature:
/// x has means 0/5/10 (sd 0.5), y is N(0, 0.25) for the compact clusters and
/// Unif(-100, 100) for the elongated one. Only x carries the structure;
/// the inflated y dispersion is what misleads unweighted clustering.
Dataset gen_data1_analog(std::uint64_t seed);

/// Ten features, three clusters of 100 points; features 1-4 have cluster
/// means 0/6/12 (unit variance), features 5-10 are N(0,1) everywhere.
Dataset gen_toy1_analog(std::uint64_t seed);

}  // namespace lwk

#endif  // LWK_DATAGEN_HPP

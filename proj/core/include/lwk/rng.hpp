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

#ifndef LWK_RNG_HPP
#define LWK_RNG_HPP

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace lwk {

/// xoshiro256++ generator with hand-rolled samplers. The standard library
/// distributions are implementation-defined, so every draw here is fixed
/// arithmetic: results are bit-identical for a given seed on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01();

    double uniform(double a, double b);

    /// Standard normal via the Marsaglia polar method (one spare cached).
    double normal();

    double normal(double mean, double sd);

    /// Chi-square with integer degrees of freedom, as a sum of df squared
    /// standard normals.
    double chisq(int df);

    /// Unbiased integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);

    /// k distinct indices drawn uniformly from [0, n), in draw order.
    std::vector<Eigen::Index> sample_without_replacement(Eigen::Index n, int k);

private:
    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Stable seed derivation for restart/grid scheduling: derive(seed, i, j)
/// depends only on its arguments, so parallel execution order cannot change
/// any stream.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

}  // namespace lwk

#endif  // LWK_RNG_HPP

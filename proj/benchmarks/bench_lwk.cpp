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
#include "lwk/datagen.hpp"
#include "lwk/kmeans1d.hpp"
#include "lwk/lwkmeans.hpp"
#include "lwk/standardize.hpp"

#include <benchmark/benchmark.h>

namespace {

const lwk::DataMatrix& desk_data() {
    static const lwk::DataMatrix x =
        lwk::standardize(lwk::gen_example2(1, 50, 150).data);
    return x;
}

void BM_UpdateAssignments(benchmark::State& state) {
    const auto& x = desk_data();
    const lwk::Centroids z(x.values.topRows(3));
    const lwk::WeightVector w(
        Eigen::VectorXd::Constant(x.p(), 1.0 / static_cast<double>(x.p())));
    for (auto _ : state) {
        benchmark::DoNotOptimize(lwk::update_assignments(x, z, w, 0.005, 4));
    }
}
BENCHMARK(BM_UpdateAssignments);

void BM_DispersionsAndWeights(benchmark::State& state) {
    const auto& x = desk_data();
    const lwk::Centroids z(x.values.topRows(3));
    const lwk::Assignment a = lwk::update_assignments(
        x, z,
        lwk::WeightVector(Eigen::VectorXd::Constant(x.p(), 1.0 / static_cast<double>(x.p()))),
        0.005, 4);
    const double alpha = lwk::select_alpha(x, 3, 4);
    for (auto _ : state) {
        const Eigen::VectorXd d = lwk::compute_dispersions(x, a, z);
        benchmark::DoNotOptimize(lwk::update_weights(d, alpha, 0.005, 4, x.n(), x.p()));
    }
}
BENCHMARK(BM_DispersionsAndWeights);

void BM_SelectAlpha(benchmark::State& state) {
    const auto& x = desk_data();
    for (auto _ : state) {
        benchmark::DoNotOptimize(lwk::select_alpha(x, 3, 4));
    }
}
BENCHMARK(BM_SelectAlpha);

void BM_Kmeans1d(benchmark::State& state) {
    const auto& x = desk_data();
    for (auto _ : state) {
        benchmark::DoNotOptimize(lwk::kmeans1d_optimum(x.values.col(0), 3));
    }
}
BENCHMARK(BM_Kmeans1d)->Unit(benchmark::kMicrosecond);

void BM_FitDeskScale(benchmark::State& state) {
    const auto& x = desk_data();
    lwk::LwkConfig cfg;
    cfg.k = 3;
    cfg.lambda = 0.005;
    cfg.alpha = lwk::select_alpha(x, 3, 4);
    cfg.n_restarts = 1;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        cfg.seed = seed++;
        benchmark::DoNotOptimize(lwk::fit(x, cfg));
    }
}
BENCHMARK(BM_FitDeskScale)->Unit(benchmark::kMillisecond);

void BM_FitKmeansBaseline(benchmark::State& state) {
    const auto& x = desk_data();
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lwk::fit_kmeans(x, 3, 1e-6, 100, seed++));
    }
}
BENCHMARK(BM_FitKmeansBaseline)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

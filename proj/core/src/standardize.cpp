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

#include "lwk/standardize.hpp"

#include <cmath>

namespace lwk {

DataMatrix standardize(const DataMatrix& X, StdDenominator denom) {
    X.validate();
    const Eigen::Index n = X.n();
    const Eigen::Index p = X.p();

    DataMatrix out;
    out.values.resize(n, p);
    out.feature_means.resize(p);
    out.feature_scales.resize(p);
    out.standardized = true;

    const double div = denom == StdDenominator::Population
                           ? static_cast<double>(n)
                           : static_cast<double>(n - 1);
    for (Eigen::Index l = 0; l < p; ++l) {
        const double mean = X.values.col(l).mean();
        const double ss = (X.values.col(l).array() - mean).square().sum();
        const double scale = std::sqrt(ss / div);
        out.feature_means[l] = mean;
        out.feature_scales[l] = scale;
        if (scale > 0.0) {
            out.values.col(l) = (X.values.col(l).array() - mean) / scale;
        } else {
            out.values.col(l) = X.values.col(l).array() - mean;
            out.zero_variance_columns.push_back(l);
        }
    }
    return out;
}

}  // namespace lwk

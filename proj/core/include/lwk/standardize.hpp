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

#ifndef LWK_STANDARDIZE_HPP
#define LWK_STANDARDIZE_HPP

#include "lwk/types.hpp"

namespace lwk {

enum class StdDenominator {
    Population,  // divide by n (default)
    Sample,      // divide by n - 1
};

/// Centers every column to mean zero and scales it to unit standard
/// deviation. Zero-variance columns are centered only and recorded in
/// zero_variance_columns; nothing is ever divided by zero. The original
/// means and scales are kept on the result for the inverse transform.
DataMatrix standardize(const DataMatrix& X,
                       StdDenominator denom = StdDenominator::Population);

}  // namespace lwk

#endif  // LWK_STANDARDIZE_HPP

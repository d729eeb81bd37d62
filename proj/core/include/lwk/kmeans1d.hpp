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

#ifndef LWK_KMEANS1D_HPP
#define LWK_KMEANS1D_HPP

#include <Eigen/Dense>

namespace lwk {

/// Exact optimal within-cluster sum of squares for k-means on a single
/// feature, by dynamic programming over the sorted values with
/// divide-and-conquer row minimization. O(k n log n) time, O(n) extra space.
/// Returns 0 when k >= number of distinct values.
double kmeans1d_optimum(const Eigen::Ref<const Eigen::VectorXd>& x, int k);

}  // namespace lwk

#endif  // LWK_KMEANS1D_HPP

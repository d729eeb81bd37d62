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

#ifndef LWK_METRICS_HPP
#define LWK_METRICS_HPP

#include "lwk/types.hpp"

#include <cstdint>
#include <vector>

namespace lwk {

/// Binary indicator of which features carry (or were detected to carry)
/// cluster structure.
struct RelevanceVector {
    std::vector<std::uint8_t> bits;

    Eigen::Index p() const { return static_cast<Eigen::Index>(bits.size()); }
    int count() const;
};

/// Classification error rate between two partitions of the same points:
/// 1 - (maximum agreement over injective cluster matchings) / n, the
/// matching found by the Hungarian algorithm on the confusion matrix.
/// 0 means the partitions are identical up to relabeling.
double cer(const Assignment& a, const Assignment& b);

/// Pair-counting variant: the fraction of point pairs on which the two
/// partitions disagree about co-membership.
double cer_pairwise(const Assignment& a, const Assignment& b);

/// Feature l is selected iff w_l > 0 strictly; no magnitude threshold.
RelevanceVector relevance_from_weights(const WeightVector& w);

/// Matthews correlation between two binary relevance vectors, in [-1, 1].
/// Returns 0 when any confusion-count factor in the denominator is zero.
double mcc(const RelevanceVector& truth, const RelevanceVector& pred);

struct DispersionSummary {
    Eigen::VectorXd within;  // per-feature within-cluster SS at cluster means
    Eigen::VectorXd total;   // per-feature SS around the grand mean
};

/// Within- and total per-feature dispersion of a partition; within <= total
/// up to rounding.
DispersionSummary feature_dispersion_summary(const DataMatrix& X, const Assignment& A);

}  // namespace lwk

#endif  // LWK_METRICS_HPP

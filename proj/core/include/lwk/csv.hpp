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

#ifndef LWK_CSV_HPP
#define LWK_CSV_HPP

#include "lwk/metrics.hpp"
#include "lwk/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lwk {

struct LoadedCsv {
    DataMatrix data;
    std::optional<Assignment> labels;
    std::vector<std::string> header;        // empty when the file had none
    std::vector<std::string> label_names;   // original label values, index order
};

/// Reads a rectangular numeric CSV (comma separated, UTF-8, optional header).
/// When label_column names a header column (or is a 0-based column index),
/// that column is mapped to contiguous integer labels in order of first
/// appearance and removed from the feature matrix. Ragged rows, non-numeric
/// or non-finite feature cells and missing files raise CsvError with a
/// 1-based row/column location.
LoadedCsv load_csv(const std::string& path, bool has_header,
                   const std::optional<std::string>& label_column = {});

/// Doubles are written with 17 significant digits, which round-trips every
/// finite value exactly.
std::string format_double(double v);

void write_matrix_csv(const std::string& path, const Eigen::MatrixXd& m,
                      const std::vector<std::string>& header = {});
void write_labels_csv(const std::string& path, const Assignment& a);
void write_weights_csv(const std::string& path, const WeightVector& w);
void write_relevance_csv(const std::string& path, const RelevanceVector& r);

/// Readers for the artifact schemas written above.
Assignment read_labels_csv(const std::string& path);
RelevanceVector read_relevance_csv(const std::string& path);

}  // namespace lwk

#endif  // LWK_CSV_HPP

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

#ifndef LWK_CLI_COMMANDS_HPP
#define LWK_CLI_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace lwk::cli {

// Exit codes are a stable contract: 0 success, 1 validation,
// 2 I/O, 3 degenerate data.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitDegenerate = 3;

struct ClusterArgs {
    std::string input;
    bool has_header = false;
    std::optional<std::string> label_column;
    std::optional<std::string> relevance_file;
    std::string algo = "lwk";  // lwk | kmeans | wkmeans | sparse
    int k = 2;
    double lambda = 0.0;
    double s = 1.5;  // sparse k-means L1 bound
    int beta = 4;
    std::optional<double> alpha;
    double epsilon = 1e-6;
    int max_iter = 100;
    int restarts = 20;
    std::uint64_t seed = 0;
    bool standardize = true;
    std::string out_dir = ".";
};

struct RegpathArgs {
    std::string input;
    bool has_header = false;
    std::optional<std::string> label_column;
    std::vector<double> lambdas;  // empty means auto grid
    int grid_points = 25;
    int k = 2;
    int beta = 4;
    std::optional<double> alpha;
    double epsilon = 1e-6;
    int max_iter = 100;
    int restarts = 20;
    std::uint64_t seed = 0;
    bool standardize = true;
    std::string out_dir = ".";
};

struct GenArgs {
    std::string scheme = "example1";  // example1|example2|data1|toy1|<spec.json>
    std::uint64_t seed = 0;
    int p_signal = 50;
    int p_noise = 950;
    std::string out_dir = ".";
};

struct EvalArgs {
    std::string labels_a;
    std::string labels_b;
    std::optional<std::string> relevance_truth;
    std::optional<std::string> relevance_pred;
    bool pairwise = false;
};

int run_cluster(const ClusterArgs& args, std::ostream& out, std::ostream& err);
int run_regpath(const RegpathArgs& args, std::ostream& out, std::ostream& err);
int run_gen(const GenArgs& args, std::ostream& out, std::ostream& err);
int run_eval(const EvalArgs& args, std::ostream& out, std::ostream& err);

/// Re-executes the command recorded in a manifest. Artifacts land at the
/// recorded output paths, or under out_dir when given.
int run_rerun(const std::string& manifest_path,
              const std::optional<std::string>& out_dir, std::ostream& out,
              std::ostream& err);

}  // namespace lwk::cli

#endif  // LWK_CLI_COMMANDS_HPP

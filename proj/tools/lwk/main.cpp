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

#include "lwk/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

int main(int argc, char** argv) {
    CLI::App app{
        "lwk: sparse clustering with lasso-penalized feature weights.\n"
        "Set LWK_THREADS to cap worker threads (affects speed only, never results)."};
    app.require_subcommand(1);

    lwk::cli::ClusterArgs cluster;
    std::string cluster_labels, cluster_relevance;
    auto* c = app.add_subcommand("cluster", "Fit one algorithm and write artifacts");
    c->add_option("--input,-i", cluster.input, "Input CSV")->required();
    c->add_flag("--header", cluster.has_header, "Input has a header row");
    c->add_option("--labels", cluster_labels, "Truth label column (name or index)");
    c->add_option("--relevance", cluster_relevance, "Truth relevance CSV for MCC");
    c->add_option("--algo", cluster.algo, "lwk | kmeans | wkmeans | sparse")
        ->check(CLI::IsMember({"lwk", "kmeans", "wkmeans", "sparse"}));
    c->add_option("--k", cluster.k, "Number of clusters")->required();
    c->add_option("--lambda", cluster.lambda, "Sparsity penalty (raw, not divided by p^2)");
    c->add_option("--s", cluster.s, "Sparse k-means L1 bound");
    c->add_option("--beta", cluster.beta, "Weight exponent (even integer)");
    c->add_option("--alpha", cluster.alpha, "Weight reward (default: derived from data)");
    c->add_option("--epsilon", cluster.epsilon, "Convergence tolerance");
    c->add_option("--max-iter", cluster.max_iter, "Iteration cap");
    c->add_option("--restarts", cluster.restarts, "Independent restarts");
    c->add_option("--seed", cluster.seed, "Random seed");
    c->add_flag("--standardize,!--no-standardize", cluster.standardize,
                "Standardize columns first (default on)");
    c->add_option("--out-dir,-o", cluster.out_dir, "Output directory");

    lwk::cli::RegpathArgs regpath;
    std::string regpath_labels, regpath_grid = "auto";
    std::vector<double> regpath_lambdas;
    auto* r = app.add_subcommand("regpath", "Sweep the penalty grid and aggregate paths");
    r->add_option("--input,-i", regpath.input, "Input CSV")->required();
    r->add_flag("--header", regpath.has_header, "Input has a header row");
    r->add_option("--labels", regpath_labels, "Truth label column (name or index)");
    r->add_option("--lambdas", regpath_lambdas,
                  "Explicit descending penalty values (comma separated)")
        ->delimiter(',');
    r->add_option("--grid", regpath_grid, "auto (log-spaced from the data) when --lambdas absent")
        ->check(CLI::IsMember({"auto"}));
    r->add_option("--grid-points", regpath.grid_points, "Auto grid size");
    r->add_option("--k", regpath.k, "Number of clusters")->required();
    r->add_option("--beta", regpath.beta, "Weight exponent (even integer)");
    r->add_option("--alpha", regpath.alpha, "Weight reward (default: derived from data)");
    r->add_option("--epsilon", regpath.epsilon, "Convergence tolerance");
    r->add_option("--max-iter", regpath.max_iter, "Iteration cap");
    r->add_option("--restarts", regpath.restarts, "Restarts per grid point");
    r->add_option("--seed", regpath.seed, "Random seed");
    r->add_flag("--standardize,!--no-standardize", regpath.standardize,
                "Standardize columns first (default on)");
    r->add_option("--out-dir,-o", regpath.out_dir, "Output directory");

    lwk::cli::GenArgs gen;
    auto* g = app.add_subcommand("gen", "Write a synthetic dataset with truth files");
    g->add_option("--scheme", gen.scheme,
                  "example1 | example2 | data1 | toy1 | path to a mixture spec JSON");
    g->add_option("--seed", gen.seed, "Random seed");
    g->add_option("--p-signal", gen.p_signal, "example2: informative feature count");
    g->add_option("--p-noise", gen.p_noise, "example2: noise feature count");
    g->add_option("--out-dir,-o", gen.out_dir, "Output directory");

    lwk::cli::EvalArgs eval;
    std::string eval_truth_rel, eval_pred_rel;
    auto* e = app.add_subcommand("eval", "Compare two label files; print CER (and MCC) JSON");
    e->add_option("labels_a", eval.labels_a, "First labels CSV")->required();
    e->add_option("labels_b", eval.labels_b, "Second labels CSV")->required();
    e->add_option("--truth-relevance", eval_truth_rel, "Truth relevance CSV");
    e->add_option("--pred-relevance", eval_pred_rel, "Predicted relevance CSV");
    e->add_flag("--pairwise", eval.pairwise, "Pair-counting CER instead of matching CER");

    std::string rerun_manifest, rerun_out;
    auto* rr = app.add_subcommand("rerun", "Reproduce a run from its manifest");
    rr->add_option("manifest", rerun_manifest, "manifest.json from a previous run")
        ->required();
    rr->add_option("--out-dir,-o", rerun_out, "Override output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // help/version exit cleanly, bad flags are validation
    }

    if (c->parsed()) {
        if (!cluster_labels.empty()) cluster.label_column = cluster_labels;
        if (!cluster_relevance.empty()) cluster.relevance_file = cluster_relevance;
        return lwk::cli::run_cluster(cluster, std::cout, std::cerr);
    }
    if (r->parsed()) {
        if (!regpath_labels.empty()) regpath.label_column = regpath_labels;
        regpath.lambdas = regpath_lambdas;
        return lwk::cli::run_regpath(regpath, std::cout, std::cerr);
    }
    if (g->parsed()) {
        return lwk::cli::run_gen(gen, std::cout, std::cerr);
    }
    if (e->parsed()) {
        if (!eval_truth_rel.empty()) eval.relevance_truth = eval_truth_rel;
        if (!eval_pred_rel.empty()) eval.relevance_pred = eval_pred_rel;
        return lwk::cli::run_eval(eval, std::cout, std::cerr);
    }
    if (rr->parsed()) {
        std::optional<std::string> out_dir;
        if (!rerun_out.empty()) out_dir = rerun_out;
        return lwk::cli::run_rerun(rerun_manifest, out_dir, std::cout, std::cerr);
    }
    return 0;
}

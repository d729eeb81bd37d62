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

#include "lwk/baselines.hpp"
#include "lwk/csv.hpp"
#include "lwk/datagen.hpp"
#include "lwk/lwkmeans.hpp"
#include "lwk/metrics.hpp"
#include "lwk/regpath.hpp"
#include "lwk/standardize.hpp"

#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>

namespace lwk::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const DegenerateDataError& e) {
        err << "error: degenerate-data: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const CsvError& e) {
        err << "error: io: " << e.what() << "\n";
        return kExitIo;
    } catch (const fs::filesystem_error& e) {
        err << "error: io: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::ios_base::failure& e) {
        err << "error: io: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "error: validation: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        err << "error: validation: " << e.what() << "\n";
        return kExitValidation;
    }
}

std::string join_path(const std::string& dir, const std::string& name) {
    return (fs::path(dir) / name).string();
}

void write_json(const std::string& path, const json& j) {
    std::ofstream f(path);
    if (!f) throw CsvError(path, 0, 0, "cannot open file for writing");
    f << j.dump(2) << "\n";
}

json load_json(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw CsvError(path, 0, 0, "cannot open file");
    json j;
    f >> j;
    return j;
}

json optional_to_json(const std::optional<double>& v) {
    return v ? json(*v) : json(nullptr);
}

json optional_to_json(const std::optional<std::string>& v) {
    return v ? json(*v) : json(nullptr);
}

GenSpec genspec_from_json(const json& j) {
    GenSpec spec;
    spec.scheme = j.value("scheme", std::string("mixture"));
    spec.seed = j.value("seed", std::uint64_t{0});
    for (const auto& jc : j.at("clusters")) {
        ClusterSpec c;
        c.count = jc.at("count").get<int>();
        for (const auto& jf : jc.at("features")) {
            const std::string dist = jf.at("dist").get<std::string>();
            if (dist == "normal") {
                c.features.push_back(
                    NormalDist{jf.at("mean").get<double>(), jf.at("sd").get<double>()});
            } else if (dist == "uniform") {
                c.features.push_back(
                    UniformDist{jf.at("a").get<double>(), jf.at("b").get<double>()});
            } else if (dist == "chisq") {
                c.features.push_back(ChiSqDist{jf.at("df").get<int>()});
            } else {
                throw ValidationError("dist", "unknown distribution '" + dist + "'");
            }
        }
        spec.clusters.push_back(std::move(c));
    }
    return spec;
}

struct AlgoRun {
    FitResult best;
    int best_index = 0;
};

AlgoRun dispatch_fit(const DataMatrix& X, const ClusterArgs& a) {
    AlgoRun run;
    if (a.algo == "lwk") {
        LwkConfig cfg;
        cfg.k = a.k;
        cfg.lambda = a.lambda;
        cfg.beta = a.beta;
        cfg.alpha = a.alpha;
        cfg.epsilon = a.epsilon;
        cfg.max_iter = a.max_iter;
        cfg.seed = a.seed;
        cfg.n_restarts = a.restarts;
        MultiFitResult multi = fit_multi(X, cfg);
        run.best = std::move(multi.best);
        run.best_index = multi.best_index;
    } else if (a.algo == "kmeans") {
        MultiFitResult multi =
            best_of_restarts(a.restarts, a.seed, [&](std::uint64_t s) {
                return fit_kmeans(X, a.k, a.epsilon, a.max_iter, s);
            });
        run.best = std::move(multi.best);
        run.best_index = multi.best_index;
    } else if (a.algo == "wkmeans") {
        MultiFitResult multi =
            best_of_restarts(a.restarts, a.seed, [&](std::uint64_t s) {
                return fit_wkmeans(X, a.k, a.beta, a.epsilon, a.max_iter, s);
            });
        run.best = std::move(multi.best);
        run.best_index = multi.best_index;
    } else if (a.algo == "sparse") {
        SparseKmConfig cfg;
        cfg.k = a.k;
        cfg.s = a.s;
        cfg.epsilon = a.epsilon;
        cfg.max_iter = a.max_iter;
        cfg.n_restarts = a.restarts;
        MultiFitResult multi =
            best_of_restarts(a.restarts, a.seed, [&](std::uint64_t s) {
                SparseKmConfig c = cfg;
                c.seed = s;
                return fit_sparse_kmeans(X, c);
            });
        run.best = std::move(multi.best);
        run.best_index = multi.best_index;
    } else {
        throw ValidationError("algo", "unknown algorithm '" + a.algo + "'");
    }
    return run;
}

json cluster_manifest(const ClusterArgs& a, const AlgoRun& run, double wall_seconds,
                      const std::string& labels_path, const std::string& weights_path,
                      const std::optional<std::string>& metrics_path) {
    json m;
    m["schema"] = 1;
    m["command"] = "cluster";
    m["input"] = a.input;
    m["has_header"] = a.has_header;
    m["label_column"] = optional_to_json(a.label_column);
    m["relevance_file"] = optional_to_json(a.relevance_file);
    m["algorithm"] = a.algo;
    m["params"] = {
        {"k", a.k},           {"lambda", a.lambda},
        {"s", a.s},           {"beta", a.beta},
        {"alpha", optional_to_json(a.alpha)},
        {"epsilon", a.epsilon}, {"max_iter", a.max_iter},
        {"restarts", a.restarts}, {"seed", a.seed},
        {"standardize", a.standardize},
    };
    m["outputs"] = {{"labels", labels_path}, {"weights", weights_path}};
    if (metrics_path) m["outputs"]["metrics"] = *metrics_path;
    m["results"] = {
        {"alpha_used", run.best.alpha_used},
        {"final_objective", run.best.final_objective()},
        {"iterations", run.best.iterations},
        {"converged", run.best.converged},
        {"degenerate", run.best.degenerate},
        {"best_restart", run.best_index},
        {"wall_time_seconds", wall_seconds},
    };
    return m;
}

ClusterArgs cluster_args_from_manifest(const json& m) {
    ClusterArgs a;
    a.input = m.at("input").get<std::string>();
    a.has_header = m.at("has_header").get<bool>();
    if (!m.at("label_column").is_null()) {
        a.label_column = m.at("label_column").get<std::string>();
    }
    if (!m.at("relevance_file").is_null()) {
        a.relevance_file = m.at("relevance_file").get<std::string>();
    }
    a.algo = m.at("algorithm").get<std::string>();
    const json& p = m.at("params");
    a.k = p.at("k").get<int>();
    a.lambda = p.at("lambda").get<double>();
    a.s = p.at("s").get<double>();
    a.beta = p.at("beta").get<int>();
    if (!p.at("alpha").is_null()) a.alpha = p.at("alpha").get<double>();
    a.epsilon = p.at("epsilon").get<double>();
    a.max_iter = p.at("max_iter").get<int>();
    a.restarts = p.at("restarts").get<int>();
    a.seed = p.at("seed").get<std::uint64_t>();
    a.standardize = p.at("standardize").get<bool>();
    return a;
}

RegpathArgs regpath_args_from_manifest(const json& m) {
    RegpathArgs a;
    a.input = m.at("input").get<std::string>();
    a.has_header = m.at("has_header").get<bool>();
    if (!m.at("label_column").is_null()) {
        a.label_column = m.at("label_column").get<std::string>();
    }
    const json& p = m.at("params");
    a.lambdas = p.at("lambdas").get<std::vector<double>>();
    a.k = p.at("k").get<int>();
    a.beta = p.at("beta").get<int>();
    if (!p.at("alpha").is_null()) a.alpha = p.at("alpha").get<double>();
    a.epsilon = p.at("epsilon").get<double>();
    a.max_iter = p.at("max_iter").get<int>();
    a.restarts = p.at("restarts").get<int>();
    a.seed = p.at("seed").get<std::uint64_t>();
    a.standardize = p.at("standardize").get<bool>();
    return a;
}

GenArgs gen_args_from_manifest(const json& m) {
    GenArgs a;
    a.scheme = m.at("scheme").get<std::string>();
    const json& p = m.at("params");
    a.seed = p.at("seed").get<std::uint64_t>();
    a.p_signal = p.at("p_signal").get<int>();
    a.p_noise = p.at("p_noise").get<int>();
    return a;
}

}  // namespace

int run_cluster(const ClusterArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() {
        const auto t0 = std::chrono::steady_clock::now();
        const LoadedCsv loaded = load_csv(args.input, args.has_header, args.label_column);
        const DataMatrix X =
            args.standardize ? standardize(loaded.data) : loaded.data;

        const AlgoRun run = dispatch_fit(X, args);
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        fs::create_directories(args.out_dir);
        const std::string labels_path = join_path(args.out_dir, "labels.csv");
        const std::string weights_path = join_path(args.out_dir, "weights.csv");
        write_labels_csv(labels_path, run.best.assignment);
        write_weights_csv(weights_path, run.best.weights);

        std::optional<std::string> metrics_path;
        if (loaded.labels) {
            json metrics;
            metrics["cer"] = cer(*loaded.labels, run.best.assignment);
            metrics["cer_definition"] = "matching";
            if (args.relevance_file) {
                const RelevanceVector truth = read_relevance_csv(*args.relevance_file);
                metrics["mcc"] = mcc(truth, relevance_from_weights(run.best.weights));
            }
            metrics_path = join_path(args.out_dir, "metrics.json");
            write_json(*metrics_path, metrics);
        }

        const json manifest =
            cluster_manifest(args, run, wall, labels_path, weights_path, metrics_path);
        write_json(join_path(args.out_dir, "manifest.json"), manifest);
        out << "wrote " << labels_path << ", " << weights_path << "\n";
        return kExitOk;
    });
}

int run_regpath(const RegpathArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() {
        const LoadedCsv loaded = load_csv(args.input, args.has_header, args.label_column);
        const DataMatrix X =
            args.standardize ? standardize(loaded.data) : loaded.data;

        LwkConfig cfg;
        cfg.k = args.k;
        cfg.beta = args.beta;
        cfg.alpha = args.alpha;
        cfg.epsilon = args.epsilon;
        cfg.max_iter = args.max_iter;
        cfg.seed = args.seed;
        cfg.n_restarts = args.restarts;

        std::vector<double> grid = args.lambdas;
        if (grid.empty()) grid = auto_lambda_grid(X, cfg, args.grid_points);
        const Assignment* truth = loaded.labels ? &*loaded.labels : nullptr;
        const std::vector<PathPoint> path = sweep(X, cfg, grid, truth);

        fs::create_directories(args.out_dir);
        const std::string path_csv = join_path(args.out_dir, "path.csv");
        const std::string summary_csv = join_path(args.out_dir, "summary.csv");
        {
            std::ofstream f(path_csv);
            if (!f) throw CsvError(path_csv, 0, 0, "cannot open file for writing");
            f << "lambda,feature_index,mean_weight,median_weight\n";
            for (const auto& pt : path) {
                for (Eigen::Index l = 0; l < pt.mean_weights.size(); ++l) {
                    f << format_double(pt.lambda) << "," << l << ","
                      << format_double(pt.mean_weights[l]) << ","
                      << format_double(pt.median_weights[l]) << "\n";
                }
            }
        }
        {
            std::ofstream f(summary_csv);
            if (!f) throw CsvError(summary_csv, 0, 0, "cannot open file for writing");
            f << "lambda,mean_cer,median_cer,n_selected_mean,degenerate_fraction\n";
            for (const auto& pt : path) {
                f << format_double(pt.lambda) << ",";
                if (pt.mean_cer) f << format_double(*pt.mean_cer);
                f << ",";
                if (pt.median_cer) f << format_double(*pt.median_cer);
                f << "," << format_double(pt.n_selected_mean) << ","
                  << format_double(pt.degenerate_fraction) << "\n";
            }
        }

        json m;
        m["schema"] = 1;
        m["command"] = "regpath";
        m["input"] = args.input;
        m["has_header"] = args.has_header;
        m["label_column"] = optional_to_json(args.label_column);
        m["params"] = {
            {"lambdas", grid},     {"k", args.k},
            {"beta", args.beta},   {"alpha", optional_to_json(args.alpha)},
            {"epsilon", args.epsilon}, {"max_iter", args.max_iter},
            {"restarts", args.restarts}, {"seed", args.seed},
            {"standardize", args.standardize},
        };
        m["outputs"] = {{"path", path_csv}, {"summary", summary_csv}};
        write_json(join_path(args.out_dir, "manifest.json"), m);

        json rec;
        const auto plateau = select_lambda_plateau(path);
        if (plateau) {
            rec["plateau"] = {{"lambda_high", plateau->lambda_high},
                              {"lambda_low", plateau->lambda_low},
                              {"n_features", plateau->n_features}};
        } else {
            rec["plateau"] = nullptr;
        }
        out << rec.dump() << "\n";
        return kExitOk;
    });
}

int run_gen(const GenArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() {
        Dataset ds;
        if (args.scheme == "example1") {
            ds = gen_example1(args.seed);
        } else if (args.scheme == "example2") {
            ds = gen_example2(args.seed, args.p_signal, args.p_noise);
        } else if (args.scheme == "data1") {
            ds = gen_data1_analog(args.seed);
        } else if (args.scheme == "toy1") {
            ds = gen_toy1_analog(args.seed);
        } else {
            GenSpec spec = genspec_from_json(load_json(args.scheme));
            spec.seed = args.seed;
            ds = gen_mixture(spec);
        }

        fs::create_directories(args.out_dir);
        const std::string data_path = join_path(args.out_dir, "data.csv");
        const std::string labels_path = join_path(args.out_dir, "labels.csv");
        const std::string relevance_path = join_path(args.out_dir, "relevance.csv");
        write_matrix_csv(data_path, ds.data.values);
        write_labels_csv(labels_path, ds.truth);
        write_relevance_csv(relevance_path, ds.relevance);

        json m;
        m["schema"] = 1;
        m["command"] = "gen";
        m["scheme"] = args.scheme;
        m["params"] = {{"seed", args.seed},
                       {"p_signal", args.p_signal},
                       {"p_noise", args.p_noise}};
        m["outputs"] = {{"data", data_path},
                        {"labels", labels_path},
                        {"relevance", relevance_path}};
        write_json(join_path(args.out_dir, "manifest.json"), m);
        out << "wrote " << data_path << "\n";
        return kExitOk;
    });
}

int run_eval(const EvalArgs& args, std::ostream& out, std::ostream& err) {
    return guarded(err, [&]() {
        if (args.relevance_truth.has_value() != args.relevance_pred.has_value()) {
            throw ValidationError("relevance",
                                  "need both truth and predicted relevance files");
        }
        const Assignment a = read_labels_csv(args.labels_a);
        const Assignment b = read_labels_csv(args.labels_b);
        json result;
        result["cer"] = args.pairwise ? cer_pairwise(a, b) : cer(a, b);
        result["cer_definition"] = args.pairwise ? "pairwise" : "matching";
        if (args.relevance_truth && args.relevance_pred) {
            const RelevanceVector truth = read_relevance_csv(*args.relevance_truth);
            const RelevanceVector pred = read_relevance_csv(*args.relevance_pred);
            result["mcc"] = mcc(truth, pred);
        }
        out << result.dump() << "\n";
        return kExitOk;
    });
}

int run_rerun(const std::string& manifest_path,
              const std::optional<std::string>& out_dir, std::ostream& out,
              std::ostream& err) {
    return guarded(err, [&]() {
        const json m = load_json(manifest_path);
        const std::string command = m.at("command").get<std::string>();
        const std::string dir =
            out_dir ? *out_dir
                    : fs::path(m.at("outputs").begin().value().get<std::string>())
                          .parent_path()
                          .string();
        if (command == "cluster") {
            ClusterArgs a = cluster_args_from_manifest(m);
            a.out_dir = dir.empty() ? "." : dir;
            return run_cluster(a, out, err);
        }
        if (command == "regpath") {
            RegpathArgs a = regpath_args_from_manifest(m);
            a.out_dir = dir.empty() ? "." : dir;
            return run_regpath(a, out, err);
        }
        if (command == "gen") {
            GenArgs a = gen_args_from_manifest(m);
            a.out_dir = dir.empty() ? "." : dir;
            return run_gen(a, out, err);
        }
        throw ValidationError("command", "manifest command '" + command +
                                             "' cannot be re-run");
    });
}

}  // namespace lwk::cli

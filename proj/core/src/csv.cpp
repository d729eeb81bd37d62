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

#include "lwk/csv.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

namespace lwk {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (const char ch : line) {
        if (ch == ',') {
            cells.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    cells.push_back(trim(cur));
    return cells;
}

double parse_cell(const std::string& path, long row, long col, const std::string& cell) {
    if (cell.empty()) throw CsvError(path, row, col, "empty cell");
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end != cell.c_str() + cell.size()) {
        throw CsvError(path, row, col, "not a number: '" + cell + "'");
    }
    if (!std::isfinite(v)) {
        throw CsvError(path, row, col, "non-finite value: '" + cell + "'");
    }
    return v;
}

bool parse_index(const std::string& s, std::size_t& out) {
    if (s.empty()) return false;
    for (const char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    }
    out = static_cast<std::size_t>(std::strtoul(s.c_str(), nullptr, 10));
    return true;
}

std::vector<std::vector<std::string>> read_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CsvError(path, 0, 0, "cannot open file");
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        rows.push_back(split_line(line));
    }
    if (rows.empty()) throw CsvError(path, 0, 0, "file has no rows");
    return rows;
}

}  // namespace

LoadedCsv load_csv(const std::string& path, bool has_header,
                   const std::optional<std::string>& label_column) {
    const auto rows = read_rows(path);

    LoadedCsv out;
    std::size_t first_data = 0;
    if (has_header) {
        out.header = rows[0];
        first_data = 1;
        if (rows.size() < 2) throw CsvError(path, 1, 1, "header but no data rows");
    }
    const std::size_t width = rows[first_data].size();
    for (std::size_t r = first_data; r < rows.size(); ++r) {
        if (rows[r].size() != width) {
            throw CsvError(path, static_cast<long>(r + 1),
                           static_cast<long>(rows[r].size()),
                           "ragged row: expected " + std::to_string(width) +
                               " cells, got " + std::to_string(rows[r].size()));
        }
    }

    std::optional<std::size_t> label_idx;
    if (label_column) {
        for (std::size_t c = 0; c < out.header.size(); ++c) {
            if (out.header[c] == *label_column) label_idx = c;
        }
        if (!label_idx) {
            std::size_t parsed = 0;
            if (parse_index(*label_column, parsed) && parsed < width) {
                label_idx = parsed;
            }
        }
        if (!label_idx) {
            throw CsvError(path, has_header ? 1 : 0, 0,
                           "label column '" + *label_column + "' not found");
        }
    }

    const std::size_t n = rows.size() - first_data;
    const std::size_t p = width - (label_idx ? 1 : 0);
    if (p == 0) throw CsvError(path, 1, 1, "no feature columns left");

    Eigen::MatrixXd values(n, p);
    Eigen::VectorXi labels(n);
    std::map<std::string, int> label_map;
    std::vector<std::string> label_names;
    for (std::size_t r = 0; r < n; ++r) {
        const auto& row = rows[r + first_data];
        std::size_t out_col = 0;
        for (std::size_t c = 0; c < width; ++c) {
            if (label_idx && c == *label_idx) {
                const std::string& cell = row[c];
                auto it = label_map.find(cell);
                if (it == label_map.end()) {
                    it = label_map.emplace(cell, static_cast<int>(label_map.size())).first;
                    label_names.push_back(cell);
                }
                labels[static_cast<Eigen::Index>(r)] = it->second;
            } else {
                values(static_cast<Eigen::Index>(r),
                       static_cast<Eigen::Index>(out_col++)) =
                    parse_cell(path, static_cast<long>(r + first_data + 1),
                               static_cast<long>(c + 1), row[c]);
            }
        }
    }

    out.data = DataMatrix(std::move(values));
    if (label_idx) {
        out.labels = Assignment(std::move(labels), static_cast<int>(label_map.size()));
        out.label_names = std::move(label_names);
        if (has_header) out.header.erase(out.header.begin() + static_cast<long>(*label_idx));
    }
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream f(path);
    if (!f) throw CsvError(path, 0, 0, "cannot open file for writing");
    return f;
}

}  // namespace

void write_matrix_csv(const std::string& path, const Eigen::MatrixXd& m,
                      const std::vector<std::string>& header) {
    auto f = open_out(path);
    if (!header.empty()) {
        for (std::size_t c = 0; c < header.size(); ++c) {
            f << (c ? "," : "") << header[c];
        }
        f << "\n";
    }
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            f << (j ? "," : "") << format_double(m(i, j));
        }
        f << "\n";
    }
}

void write_labels_csv(const std::string& path, const Assignment& a) {
    auto f = open_out(path);
    f << "row_index,cluster\n";
    for (Eigen::Index i = 0; i < a.n(); ++i) {
        f << i << "," << a.labels[i] << "\n";
    }
}

void write_weights_csv(const std::string& path, const WeightVector& w) {
    auto f = open_out(path);
    f << "feature_index,weight\n";
    for (Eigen::Index l = 0; l < w.p(); ++l) {
        f << l << "," << format_double(w.weights[l]) << "\n";
    }
}

void write_relevance_csv(const std::string& path, const RelevanceVector& r) {
    auto f = open_out(path);
    f << "feature_index,selected\n";
    for (std::size_t l = 0; l < r.bits.size(); ++l) {
        f << l << "," << (r.bits[l] ? 1 : 0) << "\n";
    }
}

Assignment read_labels_csv(const std::string& path) {
    const LoadedCsv loaded = load_csv(path, true, std::string("cluster"));
    if (!loaded.labels) throw CsvError(path, 1, 1, "no cluster column");
    return *loaded.labels;
}

RelevanceVector read_relevance_csv(const std::string& path) {
    const auto rows = read_rows(path);
    RelevanceVector out;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != 2) {
            throw CsvError(path, static_cast<long>(r + 1), 1, "expected two cells");
        }
        const double v = parse_cell(path, static_cast<long>(r + 1), 2, rows[r][1]);
        out.bits.push_back(v != 0.0 ? 1 : 0);
    }
    if (out.bits.empty()) throw CsvError(path, 1, 1, "no relevance rows");
    return out;
}

}  // namespace lwk

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

#include "lwk/rng.hpp"
#include "lwk/standardize.hpp"
#include "lwk/types.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace lwk;

TEST_CASE("penalized feature multiplier matches hand-computed values") {
    CHECK(penalized_feature_multiplier(0.0, 5.0, 3, 4) == 0.0);
    CHECK(penalized_feature_multiplier(1.0, 0.0, 1, 4) == 1.0);
    // 0.5^2 + 8/4 * 0.5
    CHECK(penalized_feature_multiplier(0.5, 8.0, 2, 2) == doctest::Approx(1.25).epsilon(1e-15));
}

TEST_CASE("penalized feature multiplier rejects bad input") {
    CHECK_THROWS_AS(penalized_feature_multiplier(std::numeric_limits<double>::quiet_NaN(),
                                                 1.0, 2, 4),
                    ValidationError);
    CHECK_THROWS_AS(penalized_feature_multiplier(
                        std::numeric_limits<double>::infinity(), 1.0, 2, 4),
                    ValidationError);
    CHECK_THROWS_AS(penalized_feature_multiplier(-0.1, 1.0, 2, 4), ValidationError);
    CHECK_THROWS_AS(penalized_feature_multiplier(0.1, -1.0, 2, 4), ValidationError);
    CHECK_THROWS_AS(penalized_feature_multiplier(0.1, 1.0, 2, 3), ValidationError);
}

TEST_CASE("penalized feature multiplier is monotone nondecreasing in w") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const double lambda = rng.uniform(0.0, 100.0);
        const int p = 1 + static_cast<int>(rng.below(30));
        const int beta = 2 * (1 + static_cast<int>(rng.below(3)));
        double prev = penalized_feature_multiplier(0.0, lambda, p, beta);
        for (int i = 1; i <= 60; ++i) {
            const double w = i * 0.1;
            const double cur = penalized_feature_multiplier(w, lambda, p, beta);
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("standardize centers and scales columns") {
    Eigen::MatrixXd v(2, 1);
    v << 1.0, 3.0;
    const DataMatrix x(v);

    SUBCASE("population convention divides by n") {
        const DataMatrix s = standardize(x, StdDenominator::Population);
        CHECK(s.values(0, 0) == doctest::Approx(-1.0));
        CHECK(s.values(1, 0) == doctest::Approx(1.0));
        CHECK(s.feature_means[0] == doctest::Approx(2.0));
        CHECK(s.feature_scales[0] == doctest::Approx(1.0));
    }
    SUBCASE("sample convention divides by n-1") {
        const DataMatrix s = standardize(x, StdDenominator::Sample);
        CHECK(s.values(0, 0) == doctest::Approx(-1.0 / std::sqrt(2.0)));
        CHECK(s.values(1, 0) == doctest::Approx(1.0 / std::sqrt(2.0)));
    }
}

TEST_CASE("standardize centers constant columns and flags them") {
    Eigen::MatrixXd v(3, 2);
    v << 5.0, 1.0, 5.0, 2.0, 5.0, 3.0;
    const DataMatrix s = standardize(DataMatrix(v));
    CHECK(s.values.col(0).isZero(0.0));
    REQUIRE(s.zero_variance_columns.size() == 1);
    CHECK(s.zero_variance_columns[0] == 0);
    CHECK(s.standardized);
}

TEST_CASE("standardized columns have mean 0 and unit scale") {
    Rng rng(42);
    Eigen::MatrixXd v(37, 5);
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
        for (Eigen::Index j = 0; j < v.cols(); ++j) {
            v(i, j) = rng.normal(3.0 * static_cast<double>(j), 1.0 + static_cast<double>(j));
        }
    }
    const DataMatrix s = standardize(DataMatrix(v));
    for (Eigen::Index j = 0; j < s.p(); ++j) {
        CHECK(std::abs(s.values.col(j).mean()) < 1e-12);
        const double var = s.values.col(j).array().square().mean();
        CHECK(var == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("standardize is idempotent") {
    Rng rng(7);
    Eigen::MatrixXd v(25, 4);
    for (Eigen::Index i = 0; i < v.rows(); ++i) {
        for (Eigen::Index j = 0; j < v.cols(); ++j) v(i, j) = rng.uniform(-4.0, 9.0);
    }
    const DataMatrix once = standardize(DataMatrix(v));
    const DataMatrix twice = standardize(once);
    CHECK((twice.values - once.values).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("validate_config accepts a reasonable setup and rejects each violation") {
    Eigen::MatrixXd v = Eigen::MatrixXd::Random(10, 3);
    const DataMatrix x(v);
    LwkConfig good;
    good.k = 2;
    good.beta = 4;
    good.epsilon = 1e-6;
    good.lambda = 0.1;
    CHECK_NOTHROW(validate_config(good, x));

    LwkConfig bad = good;
    bad.beta = 3;
    CHECK_THROWS_WITH_AS(validate_config(bad, x), doctest::Contains("beta"),
                         ValidationError);
    bad = good;
    bad.k = 11;
    CHECK_THROWS_WITH_AS(validate_config(bad, x), doctest::Contains("k"), ValidationError);
    bad = good;
    bad.k = 1;
    CHECK_THROWS_AS(validate_config(bad, x), ValidationError);
    bad = good;
    bad.epsilon = 0.0;
    CHECK_THROWS_WITH_AS(validate_config(bad, x), doctest::Contains("epsilon"),
                         ValidationError);
    bad = good;
    bad.lambda = -0.5;
    CHECK_THROWS_WITH_AS(validate_config(bad, x), doctest::Contains("lambda"),
                         ValidationError);
    bad = good;
    bad.n_restarts = 0;
    CHECK_THROWS_AS(validate_config(bad, x), ValidationError);
}

TEST_CASE("data matrix invariants") {
    Eigen::MatrixXd one_row(1, 2);
    one_row << 1.0, 2.0;
    CHECK_THROWS_AS(DataMatrix{one_row}, ValidationError);

    Eigen::MatrixXd with_nan(2, 2);
    with_nan << 1.0, 2.0, std::numeric_limits<double>::quiet_NaN(), 4.0;
    CHECK_THROWS_AS(DataMatrix{with_nan}, ValidationError);
}

TEST_CASE("assignments round-trip through one-hot form") {
    Eigen::VectorXi labels(5);
    labels << 0, 2, 1, 2, 0;
    const Assignment a(labels, 3);
    const Eigen::MatrixXd u = a.to_onehot();
    for (Eigen::Index i = 0; i < u.rows(); ++i) {
        CHECK(u.row(i).sum() == doctest::Approx(1.0));
        CHECK(u(i, labels[i]) == 1.0);
    }

    Eigen::VectorXi out_of_range(2);
    out_of_range << 0, 3;
    CHECK_THROWS_AS(Assignment(out_of_range, 3), ValidationError);
}

#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "fixtures.hpp"
#include "sba/cluster.hpp"
#include "sba/metrics.hpp"
#include "sba/rng.hpp"

using sba::Graphon;
using sba::Matrix;

TEST_CASE("a perfect estimate has zero error") {
    const Graphon g = fixtures::four_block_graphon();
    const std::vector<double> labels = fixtures::spread_labels(8);
    Matrix est(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) est(i, j) = g.eval(labels[i], labels[j]);
    CHECK_EQ(sba::mae(g, labels, est), 0.0);
    CHECK_EQ(sba::mse(g, labels, est), 0.0);
}

TEST_CASE("a constant offset shows up directly") {
    const Graphon g = fixtures::constant_graphon(0.3);
    const std::vector<double> labels = fixtures::spread_labels(5);
    Matrix est(5, 5);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) est(i, j) = 0.4;
    CHECK_EQ(sba::mae(g, labels, est), doctest::Approx(0.1));
    CHECK_EQ(sba::mse(g, labels, est), doctest::Approx(0.01));
}

TEST_CASE("two-vertex worked example") {
    // truth 0.5 everywhere, estimate [[0.5, 0.7], [0.3, 0.5]]:
    // MAE = (0 + 0.2 + 0.2 + 0) / 4, MSE = (0 + 0.04 + 0.04 + 0) / 4.
    const Graphon g = fixtures::constant_graphon(0.5);
    const std::vector<double> labels{0.2, 0.8};
    Matrix est(2, 2);
    est(0, 0) = 0.5;
    est(0, 1) = 0.7;
    est(1, 0) = 0.3;
    est(1, 1) = 0.5;
    CHECK_EQ(sba::mae(g, labels, est), doctest::Approx(0.1));
    CHECK_EQ(sba::mse(g, labels, est), doctest::Approx(0.02));
}

TEST_CASE("zero is no larger than mae which is no larger than one") {
    const Graphon g = fixtures::four_block_graphon();
    sba::Rng rng(61);
    const auto labels = sba::sample_labels(20, rng);
    Matrix est(20, 20);
    for (int i = 0; i < 20; ++i)
        for (int j = 0; j < 20; ++j) est(i, j) = rng.next_double();
    const double mae = sba::mae(g, labels, est);
    const double mse = sba::mse(g, labels, est);
    CHECK_GE(mse, 0.0);
    CHECK_LE(mse, mae);
    CHECK_LE(mae, 1.0);
}

TEST_CASE("error is symmetric in truth and estimate") {
    const std::vector<double> labels{0.1, 0.6, 0.9};
    const Graphon low = fixtures::constant_graphon(0.25);
    const Graphon high = fixtures::constant_graphon(0.75);
    Matrix low_est(3, 3), high_est(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            low_est(i, j) = 0.25;
            high_est(i, j) = 0.75;
        }
    CHECK_EQ(sba::mae(low, labels, high_est), sba::mae(high, labels, low_est));
    CHECK_EQ(sba::mse(low, labels, high_est), sba::mse(high, labels, low_est));
}

TEST_CASE("empty label lists are rejected") {
    const Graphon g = fixtures::constant_graphon(0.5);
    Matrix est(0, 0);
    CHECK_THROWS_AS(sba::mae(g, {}, est), std::invalid_argument);
    CHECK_THROWS_AS(sba::mse(g, {}, est), std::invalid_argument);
}

TEST_CASE("mismatched estimate shapes are rejected") {
    const Graphon g = fixtures::constant_graphon(0.5);
    const std::vector<double> labels{0.2, 0.6};
    Matrix est(3, 3);
    CHECK_THROWS_AS(sba::mae(g, labels, est), std::invalid_argument);
}

TEST_CASE("block-estimate overload evaluates through the assignment") {
    const Graphon g = fixtures::constant_graphon(1.0);
    sba::EstimatedGraphon est;
    est.block_probs = Matrix(1, 1);
    est.block_probs(0, 0) = 1.0;
    est.assignment = {0, 0, 0};
    const std::vector<double> labels{0.1, 0.5, 0.9};
    CHECK_EQ(sba::mae(g, labels, est), 0.0);
    CHECK_EQ(sba::mse(g, labels, est), 0.0);
}

TEST_CASE("callable version accepts arbitrary estimators") {
    const Graphon g = fixtures::constant_graphon(0.5);
    const std::vector<double> labels{0.3, 0.7};
    const double mae = sba::mae_fn(g, labels, [](int, int) { return 0.75; });
    CHECK_EQ(mae, doctest::Approx(0.25));
}

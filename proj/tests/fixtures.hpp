#pragma once

// Shared fixtures: small graphons and sample sets used across the test files.

#include <vector>

#include "sba/graphon.hpp"
#include "sba/matrix.hpp"
#include "sba/rng.hpp"
#include "sba/sample.hpp"

namespace fixtures {

// 4 x 4 equi-spaced blockmodel used throughout the experiments.
inline sba::Graphon four_block_graphon() {
    sba::Matrix probs(4, 4);
    const double entries[4][4] = {{0.8, 0.9, 0.4, 0.5},
                                  {0.1, 0.6, 0.3, 0.2},
                                  {0.3, 0.2, 0.8, 0.3},
                                  {0.4, 0.1, 0.2, 0.9}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) probs(i, j) = entries[i][j];
    return sba::Graphon::block_model({0.0, 0.25, 0.5, 0.75, 1.0}, probs);
}

// Constant graphon w == p.
inline sba::Graphon constant_graphon(double p) {
    sba::Matrix probs(1, 1);
    probs(0, 0) = p;
    return sba::Graphon::block_model({0.0, 1.0}, probs);
}

// Two perfectly separated deterministic groups: within-group probability 1,
// cross-group probability 0.
inline sba::Graphon two_block_deterministic() {
    sba::Matrix probs(2, 2);
    probs(0, 0) = 1.0;
    probs(0, 1) = 0.0;
    probs(1, 0) = 0.0;
    probs(1, 1) = 1.0;
    return sba::Graphon::block_model({0.0, 0.5, 1.0}, probs);
}

// Evenly spread labels avoiding block boundaries.
inline std::vector<double> spread_labels(int n) {
    std::vector<double> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = (i + 0.5) / n;
    return labels;
}

inline sba::GraphSampleSet constant_sample_set(double p, int n, int obs,
                                               std::uint64_t seed = 7) {
    sba::Rng rng(seed);
    const std::vector<double> labels = sba::sample_labels(n, rng);
    return sba::sample_graphs(constant_graphon(p), labels, obs, true, rng);
}

}  // namespace fixtures

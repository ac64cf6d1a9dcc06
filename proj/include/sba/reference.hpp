#pragma once

// Straightforward reference implementations of the core estimators, kept
// deliberately independent of the optimized kernels. Tests compare the fast
// paths against these, and the benchmark tool measures the speedup.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sba/matrix.hpp"
#include "sba/sample.hpp"

namespace sba::ref {

// Product estimator over the row slices: mean edge count from i to k over the
// first half of the observations times the mean from j to k over the second
// half.
inline double slice_r(const GraphSampleSet& s, int i, int j, int k) {
    const int half = s.half();
    double first = 0.0, second = 0.0;
    for (int t = 0; t < half; ++t) first += s.observations[t](i, k);
    for (int t = half; t < 2 * half; ++t) second += s.observations[t](j, k);
    return first * second / (static_cast<double>(half) * half);
}

// Column-slice analogue: edges from k into i and from k into j.
inline double slice_c(const GraphSampleSet& s, int i, int j, int k) {
    const int half = s.half();
    double first = 0.0, second = 0.0;
    for (int t = 0; t < half; ++t) first += s.observations[t](k, i);
    for (int t = half; t < 2 * half; ++t) second += s.observations[t](k, j);
    return first * second / (static_cast<double>(half) * half);
}

// Distance estimate averaged over an explicit probe set (which must exclude
// i and j). Mirrors the defining formula term by term.
inline double naive_distance(const GraphSampleSet& s, int i, int j,
                             const std::vector<int>& probes) {
    if (probes.empty()) throw std::invalid_argument("naive_distance: empty probe set");
    double acc = 0.0;
    for (int k : probes) {
        acc += slice_r(s, i, i, k) - slice_r(s, i, j, k) - slice_r(s, j, i, k) +
               slice_r(s, j, j, k);
        acc += slice_c(s, i, i, k) - slice_c(s, i, j, k) - slice_c(s, j, i, k) +
               slice_c(s, j, j, k);
    }
    return 0.5 * (acc / static_cast<double>(probes.size()));
}

// Full-neighborhood version: probes are every vertex except i and j.
inline double naive_distance_full(const GraphSampleSet& s, int i, int j) {
    std::vector<int> probes;
    probes.reserve(s.n > 2 ? s.n - 2 : 0);
    for (int k = 0; k < s.n; ++k)
        if (k != i && k != j) probes.push_back(k);
    return naive_distance(s, i, j, probes);
}

// Histogram of edge frequencies per block pair: plain triple loop over
// (observation, source vertex, target vertex). With masks present only
// unmasked slots count toward the denominator; a pair with no unmasked slots
// falls back to 0.5 and is flagged.
inline Matrix naive_block_probabilities(const GraphSampleSet& s,
                                        const std::vector<std::vector<int>>& blocks,
                                        std::vector<std::uint8_t>* fallback = nullptr) {
    const int k_blocks = static_cast<int>(blocks.size());
    Matrix probs(k_blocks, k_blocks);
    if (fallback) fallback->assign(static_cast<std::size_t>(k_blocks) * k_blocks, 0);
    for (int a = 0; a < k_blocks; ++a)
        for (int b = 0; b < k_blocks; ++b) {
            std::int64_t edges = 0, slots = 0;
            for (int t = 0; t < s.num_observations(); ++t)
                for (int i : blocks[a])
                    for (int j : blocks[b]) {
                        edges += s.observations[t](i, j);
                        slots += s.has_masks() ? s.masks[t](i, j) : 1;
                    }
            if (slots == 0) {
                probs(a, b) = 0.5;
                if (fallback) (*fallback)[static_cast<std::size_t>(a) * k_blocks + b] = 1;
            } else {
                probs(a, b) = static_cast<double>(edges) / static_cast<double>(slots);
            }
        }
    return probs;
}

}  // namespace sba::ref

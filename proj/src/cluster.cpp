#include "sba/cluster.hpp"

#include <algorithm>
#include <stdexcept>

namespace sba {

namespace {

// Checks that a blocking is a genuine partition of {0..n-1} with each pivot
// inside its own block.
void check_partition(const Blocking& blocking, int n) {
    if (blocking.blocks.size() != blocking.pivots.size())
        throw std::invalid_argument("blocking: one pivot required per block");
    std::vector<std::uint8_t> seen(n, 0);
    for (std::size_t b = 0; b < blocking.blocks.size(); ++b) {
        const auto& block = blocking.blocks[b];
        if (block.empty()) throw std::invalid_argument("blocking: empty block");
        bool pivot_found = false;
        for (int v : block) {
            if (v < 0 || v >= n)
                throw std::invalid_argument("blocking: vertex index out of range");
            if (seen[v]) throw std::invalid_argument("blocking: vertex assigned twice");
            seen[v] = 1;
            if (v == blocking.pivots[b]) pivot_found = true;
        }
        if (!pivot_found)
            throw std::invalid_argument("blocking: pivot not a member of its block");
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw std::invalid_argument("blocking: vertex missing from partition");
}

}  // namespace

Blocking cluster(const SliceDistance& engine, double delta,
                 const NeighborhoodPolicy& policy, Rng& rng) {
    if (!(delta > 0.0)) throw std::invalid_argument("cluster: delta must be positive");
    const int n = engine.n();
    if (n == 2)
        throw std::invalid_argument(
            "cluster: n = 2 leaves the distance estimator without probe vertices");

    Blocking result;
    result.delta = delta;
    const double threshold = delta * delta;
    const bool subset = policy.mode == NeighborhoodPolicy::Mode::RandomSubset;

    std::vector<int> unassigned(n);
    for (int v = 0; v < n; ++v) unassigned[v] = v;

    std::vector<int> candidates;
    std::vector<std::vector<int>> probe_lists;
    std::vector<std::uint8_t> joined;

    while (!unassigned.empty()) {
        const std::size_t pick = rng.next_index(unassigned.size());
        const int pivot = unassigned[pick];

        candidates.clear();
        for (int v : unassigned)
            if (v != pivot) candidates.push_back(v);

        const int count = static_cast<int>(candidates.size());
        joined.assign(count, 0);
        if (subset) {
            // Subsets are drawn serially in candidate order so the result is
            // independent of how the evaluations below are scheduled.
            probe_lists.resize(count);
            for (int idx = 0; idx < count; ++idx)
                probe_lists[idx] = engine.draw_probes(pivot, candidates[idx], policy, rng);
#pragma omp parallel for schedule(static)
            for (int idx = 0; idx < count; ++idx) {
                const auto& probes = probe_lists[idx];
                const double d = engine.statistic(pivot, candidates[idx], probes.data(),
                                                  static_cast<int>(probes.size()));
                joined[idx] = d <= threshold ? 1 : 0;
            }
        } else {
#pragma omp parallel for schedule(static)
            for (int idx = 0; idx < count; ++idx) {
                const double d = engine.statistic_full(pivot, candidates[idx]);
                joined[idx] = d <= threshold ? 1 : 0;
            }
        }
        result.distance_evaluations += count;

        std::vector<int> block{pivot};
        std::vector<int> remaining;
        for (int idx = 0; idx < count; ++idx) {
            if (joined[idx])
                block.push_back(candidates[idx]);
            else
                remaining.push_back(candidates[idx]);
        }
        std::sort(block.begin(), block.end());
        result.blocks.push_back(std::move(block));
        result.pivots.push_back(pivot);
        unassigned = std::move(remaining);
    }
    return result;
}

Blocking cluster(const GraphSampleSet& samples, double delta,
                 const NeighborhoodPolicy& policy, Rng& rng) {
    const SliceDistance engine(samples);
    return cluster(engine, delta, policy, rng);
}

EstimatedGraphon estimate_block_probabilities(const GraphSampleSet& samples,
                                              const Blocking& blocking) {
    const int n = samples.n;
    check_partition(blocking, n);
    const int k_blocks = blocking.block_count();
    const bool masked = samples.has_masks();

    EstimatedGraphon est;
    est.source_blocking = blocking;
    est.block_probs = Matrix(k_blocks, k_blocks);
    est.fallback.assign(static_cast<std::size_t>(k_blocks) * k_blocks, 0);
    est.assignment.assign(n, -1);
    for (int b = 0; b < k_blocks; ++b)
        for (int v : blocking.blocks[b]) est.assignment[v] = b;

#pragma omp parallel for schedule(dynamic)
    for (int pair = 0; pair < k_blocks * k_blocks; ++pair) {
        const int a = pair / k_blocks;
        const int b = pair % k_blocks;
        const auto& source = blocking.blocks[a];
        const auto& target = blocking.blocks[b];
        std::int64_t edges = 0;
        std::int64_t slots = 0;
        for (int t = 0; t < samples.num_observations(); ++t) {
            const BinaryMatrix& obs = samples.observations[t];
            if (masked) {
                const BinaryMatrix& mask = samples.masks[t];
                for (int i : source)
                    for (int j : target) {
                        edges += obs(i, j);
                        slots += mask(i, j);
                    }
            } else {
                for (int i : source) {
                    const std::uint8_t* row = obs.row(i);
                    for (int j : target) edges += row[j];
                }
            }
        }
        if (!masked)
            slots = static_cast<std::int64_t>(samples.num_observations()) *
                    static_cast<std::int64_t>(source.size()) *
                    static_cast<std::int64_t>(target.size());
        if (slots == 0) {
            est.block_probs(a, b) = 0.5;
            est.fallback[static_cast<std::size_t>(a) * k_blocks + b] = 1;
        } else {
            est.block_probs(a, b) = static_cast<double>(edges) / static_cast<double>(slots);
        }
    }
    return est;
}

double predict(const EstimatedGraphon& est, int i, int j) {
    const int n = static_cast<int>(est.assignment.size());
    if (i < 0 || i >= n || j < 0 || j >= n)
        throw std::invalid_argument("predict: vertex index out of range");
    const int a = est.assignment[i];
    const int b = est.assignment[j];
    if (a < 0 || b < 0) throw std::invalid_argument("predict: vertex has no block assignment");
    return est.block_probs(a, b);
}

}  // namespace sba

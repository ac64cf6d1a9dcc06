#pragma once

#include <cstdint>
#include <vector>

#include "sba/distance.hpp"
#include "sba/matrix.hpp"
#include "sba/rng.hpp"
#include "sba/sample.hpp"

namespace sba {

// Partition of the vertex set produced by greedy pivot clustering. Blocks are
// listed in creation order; each block keeps its members in ascending vertex
// order and records the pivot it was grown from.
struct Blocking {
    std::vector<std::vector<int>> blocks;
    std::vector<int> pivots;
    double delta = 0.0;
    // Number of pairwise distance evaluations performed; at most K * (n - 1)
    // for K resulting blocks.
    long long distance_evaluations = 0;

    int block_count() const { return static_cast<int>(blocks.size()); }
    int vertex_count() const {
        std::size_t total = 0;
        for (const auto& b : blocks) total += b.size();
        return static_cast<int>(total);
    }
};

// Piecewise-constant graphon estimate: per-block-pair edge frequencies plus
// the vertex-to-block assignment they were computed under.
struct EstimatedGraphon {
    Matrix block_probs;           // K x K edge frequencies in [0,1]
    std::vector<int> assignment;  // vertex -> block index
    Blocking source_blocking;
    // Row-major K x K flags marking block pairs that had zero unmasked slots
    // and fell back to the 0.5 default.
    std::vector<std::uint8_t> fallback;

    bool any_fallback() const {
        for (std::uint8_t f : fallback)
            if (f) return true;
        return false;
    }
};

// Greedy pivot clustering: repeatedly draw a pivot uniformly from the
// unassigned set, test every other unassigned vertex against it, and group
// those with estimated distance <= delta^2. Candidate vertices are tested in
// ascending index order. Throws for delta <= 0, and for n == 2 (the distance
// estimator has no probe vertices there).
Blocking cluster(const SliceDistance& engine, double delta,
                 const NeighborhoodPolicy& policy, Rng& rng);

// Convenience overload that builds the distance engine internally.
Blocking cluster(const GraphSampleSet& samples, double delta,
                 const NeighborhoodPolicy& policy, Rng& rng);

// Edge-frequency histogram over block pairs: for each ordered pair of blocks,
// the mean of all adjacency entries between their vertices (diagonal
// included) across all observations. With masks present, masked slots are
// dropped from the denominator; a pair with no unmasked slots gets 0.5 and a
// fallback flag.
EstimatedGraphon estimate_block_probabilities(const GraphSampleSet& samples,
                                              const Blocking& blocking);

// Estimated edge probability between vertices i and j: the block-pair entry
// for their assigned blocks.
double predict(const EstimatedGraphon& est, int i, int j);

}  // namespace sba

#pragma once

#include <vector>

#include "sba/cluster.hpp"
#include "sba/distance.hpp"
#include "sba/rng.hpp"
#include "sba/sample.hpp"

namespace sba {

// Strictly increasing sequence of positive clustering thresholds.
struct DeltaGrid {
    std::vector<double> values;

    // count values geometrically spaced from lo to hi inclusive.
    static DeltaGrid geometric(double lo, double hi, int count);
    // Ten geometric values spanning [0.05, 1.0].
    static DeltaGrid default_grid();

    void validate() const;
};

// Cross-validation risk of a partition: with h = 1/K and block shares
// p_j = |B_j| / n,
//   J = 2 / (h (n - 1)) - ((n + 1) / (h (n - 1))) * sum_j p_j^2.
// Evaluates to exactly -1 for a single block and +1 for all-singleton blocks.
double cv_risk(const Blocking& blocking, int n);

struct DeltaSelection {
    double delta = 0.0;        // selected grid value
    int selected_index = -1;   // its position in the grid
    Blocking blocking;         // the clustering it produced
    std::vector<double> risks;       // risk per grid value, grid order
    std::vector<int> block_counts;   // K per grid value, grid order
};

// Clusters once per grid value (each value gets its own deterministic RNG
// substream) and returns the risk-minimizing threshold, ties broken toward
// the smallest value.
DeltaSelection select_delta(const GraphSampleSet& samples, const DeltaGrid& grid,
                            const NeighborhoodPolicy& policy, Rng& rng);

}  // namespace sba

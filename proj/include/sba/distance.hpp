#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sba/graphon.hpp"
#include "sba/rng.hpp"
#include "sba/sample.hpp"

namespace sba {

// Which probe vertices the distance estimator averages over: every vertex
// other than the queried pair, or a uniformly drawn subset of them.
struct NeighborhoodPolicy {
    enum class Mode { Full, RandomSubset };

    Mode mode = Mode::Full;
    int subset_size = 0;  // only meaningful for RandomSubset

    static NeighborhoodPolicy full() { return {}; }
    static NeighborhoodPolicy random_subset(int size) {
        return {Mode::RandomSubset, size};
    }
};

// Product estimators (r_hat, c_hat) for vertices (i, j) probed through k:
// r_hat multiplies the mean edge count i->k over the first half of the
// observations with the mean j->k over the second half; c_hat does the same
// for the incoming directions k->i, k->j. Requires i, j, k pairwise distinct.
std::pair<double, double> slice_products(const GraphSampleSet& samples, int i, int j,
                                         int k);

// Precomputed per-vertex edge-count profiles supporting O(n) distance queries.
// Construction is O(T n^2); each full query scans four rows.
class SliceDistance {
public:
    explicit SliceDistance(const GraphSampleSet& samples);

    int n() const { return n_; }
    int half() const { return half_; }

    // Distance estimate using every probe vertex except i and j.
    double statistic_full(int i, int j) const;

    // Distance estimate over an explicit probe list (entries must exclude i, j).
    double statistic(int i, int j, const int* probes, int count) const;

    // Policy-driven estimate. RandomSubset draws a fresh without-replacement
    // subset from the supplied RNG on every call. Throws for i == j, n < 3, or
    // a subset size exceeding n - 2.
    double estimate(int i, int j, const NeighborhoodPolicy& policy, Rng& rng) const;

    // Draws the probe subset an estimate() call would use, without evaluating.
    // Lets callers pre-draw RNG-dependent subsets serially and then run the
    // arithmetic in parallel with identical results.
    std::vector<int> draw_probes(int i, int j, const NeighborhoodPolicy& policy,
                                 Rng& rng) const;

private:
    int n_ = 0;
    int half_ = 0;
    // Row-major n x n counts indexed [vertex * n + probe].
    std::vector<std::int32_t> row_first_, row_second_, col_first_, col_second_;
};

// One-shot convenience wrapper; builds the engine per call.
double estimate_distance(const GraphSampleSet& samples, int i, int j,
                         const NeighborhoodPolicy& policy, Rng& rng);

// Exact slice distance between latent positions u_i and u_j under the true
// graphon: half the sum of the squared L2 distances between the two column
// slices and between the two row slices. Closed form for blockmodels;
// midpoint quadrature with 4096 panels for formula graphons.
double exact_distance(const Graphon& g, double u_i, double u_j);

}  // namespace sba

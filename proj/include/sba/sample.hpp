#ifndef SBA_SAMPLE_HPP
#define SBA_SAMPLE_HPP

#include <vector>

#include "sba/graphon.hpp"
#include "sba/matrix.hpp"
#include "sba/rng.hpp"

namespace sba {

// n latent labels plus 2T binary n x n adjacency matrices sharing those
// labels, with optional per-observation masks (mask entry 1 = observed).
//
// Immutable after construction; safe to share across threads for reading.
// `labels` is empty for sets loaded from disk (the on-disk format carries no
// labels); sampled sets always carry them.
struct GraphSampleSet {
    int n = 0;
    std::vector<double> labels;
    std::vector<BinaryMatrix> observations;
    std::vector<BinaryMatrix> masks;
    bool directed = true;

    bool has_masks() const { return !masks.empty(); }
    int num_observations() const { return static_cast<int>(observations.size()); }
    // T in the estimator's half-split of the 2T observations.
    int half() const { return num_observations() / 2; }
};

// n independent Uniform[0,1] label draws; deterministic given the rng state.
std::vector<double> sample_labels(int n, Rng& rng);

// Draws num_observations Bernoulli adjacency matrices from w evaluated at the
// labels. Every ordered pair including the diagonal is sampled. Each
// observation uses its own substream (seed mixed with the observation index),
// so distinct observations may be sampled concurrently.
//
// num_observations must be even and >= 2: the slice-distance estimators split
// the observations into two equal halves.
GraphSampleSet sample_graphs(const Graphon& g, const std::vector<double>& labels,
                             int num_observations, bool directed, Rng& rng);

// Independent missing-edge masks, one per observation: each mask entry is 0
// with probability xi, and masked-out adjacency entries are zeroed. The masks
// are retained so block averaging can skip unobserved slots.
GraphSampleSet apply_mask(const GraphSampleSet& samples, double xi, Rng& rng);

}  // namespace sba

#endif

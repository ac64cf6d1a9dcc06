#include "sba/sample.hpp"

#include <stdexcept>

namespace sba {

namespace {

// Probability lookup table over label blocks when w is a blockmodel; avoids
// n^2 interval searches in the sampling loop.
struct ProbLookup {
    const Graphon& g;
    std::vector<int> block;
    bool tabulated;

    ProbLookup(const Graphon& gr, const std::vector<double>& labels)
        : g(gr), tabulated(gr.is_block_model()) {
        if (tabulated) {
            block.resize(labels.size());
            for (std::size_t i = 0; i < labels.size(); ++i) block[i] = g.block_of(labels[i]);
        }
    }

    double operator()(const std::vector<double>& labels, int i, int j) const {
        if (tabulated) return g.probabilities()(block[i], block[j]);
        return g.eval(labels[i], labels[j]);
    }
};

}  // namespace

std::vector<double> sample_labels(int n, Rng& rng) {
    if (n < 1) throw std::invalid_argument("sample_labels: n must be positive");
    std::vector<double> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = rng.next_double();
    return labels;
}

GraphSampleSet sample_graphs(const Graphon& g, const std::vector<double>& labels,
                             int num_observations, bool directed, Rng& rng) {
    if (labels.empty()) throw std::invalid_argument("sample_graphs: labels must be nonempty");
    for (double u : labels)
        if (!(u >= 0.0 && u <= 1.0))
            throw std::invalid_argument("sample_graphs: labels must lie in [0,1]");
    if (num_observations < 2 || num_observations % 2 != 0)
        throw std::invalid_argument(
            "sample_graphs: num_observations must be even and >= 2 (the estimators split the "
            "observations into two halves)");

    const int n = static_cast<int>(labels.size());
    GraphSampleSet set;
    set.n = n;
    set.labels = labels;
    set.directed = directed;
    set.observations.assign(num_observations, BinaryMatrix(n));

    const ProbLookup prob(g, labels);
    const std::uint64_t base = rng.next_u64();

#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < num_observations; ++t) {
        Rng sub(mix64(base, static_cast<std::uint64_t>(t)));
        BinaryMatrix& obs = set.observations[t];
        if (directed) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    obs.set(i, j, sub.bernoulli(prob(labels, i, j)) ? 1 : 0);
        } else {
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    const std::uint8_t e = sub.bernoulli(prob(labels, i, j)) ? 1 : 0;
                    obs.set(i, j, e);
                    obs.set(j, i, e);
                }
        }
    }
    return set;
}

GraphSampleSet apply_mask(const GraphSampleSet& samples, double xi, Rng& rng) {
    if (!(xi >= 0.0 && xi <= 1.0))
        throw std::invalid_argument("apply_mask: xi must lie in [0,1]");
    if (samples.has_masks())
        throw std::invalid_argument("apply_mask: sample set already has masks");

    const int n = samples.n;
    GraphSampleSet out = samples;
    out.masks.assign(samples.num_observations(), BinaryMatrix(n));

    const std::uint64_t base = rng.next_u64();

#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < samples.num_observations(); ++t) {
        Rng sub(mix64(base, static_cast<std::uint64_t>(t)));
        BinaryMatrix& mask = out.masks[t];
        BinaryMatrix& obs = out.observations[t];
        if (samples.directed) {
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    const std::uint8_t m = sub.bernoulli(xi) ? 0 : 1;
                    mask.set(i, j, m);
                    if (m == 0) obs.set(i, j, 0);
                }
        } else {
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    const std::uint8_t m = sub.bernoulli(xi) ? 0 : 1;
                    mask.set(i, j, m);
                    mask.set(j, i, m);
                    if (m == 0) {
                        obs.set(i, j, 0);
                        obs.set(j, i, 0);
                    }
                }
        }
    }
    return out;
}

}  // namespace sba

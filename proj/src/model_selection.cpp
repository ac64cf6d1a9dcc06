#include "sba/model_selection.hpp"

#include <cmath>
#include <stdexcept>

namespace sba {

DeltaGrid DeltaGrid::geometric(double lo, double hi, int count) {
    if (!(lo > 0.0)) throw std::invalid_argument("DeltaGrid: lo must be positive");
    if (count < 1) throw std::invalid_argument("DeltaGrid: count must be positive");
    if (count == 1) {
        DeltaGrid grid{{lo}};
        grid.validate();
        return grid;
    }
    if (!(hi > lo)) throw std::invalid_argument("DeltaGrid: hi must exceed lo");
    DeltaGrid grid;
    grid.values.resize(count);
    const double ratio = hi / lo;
    for (int i = 0; i < count; ++i)
        grid.values[i] = lo * std::pow(ratio, static_cast<double>(i) / (count - 1));
    grid.values.front() = lo;
    grid.values.back() = hi;
    grid.validate();
    return grid;
}

DeltaGrid DeltaGrid::default_grid() { return geometric(0.05, 1.0, 10); }

void DeltaGrid::validate() const {
    if (values.empty()) throw std::invalid_argument("DeltaGrid: empty grid");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!(values[i] > 0.0)) throw std::invalid_argument("DeltaGrid: values must be positive");
        if (i > 0 && !(values[i] > values[i - 1]))
            throw std::invalid_argument("DeltaGrid: values must be strictly increasing");
    }
}

double cv_risk(const Blocking& blocking, int n) {
    if (n < 2) throw std::invalid_argument("cv_risk: n must be at least 2");
    const std::int64_t k_blocks = blocking.block_count();
    if (k_blocks < 1) throw std::invalid_argument("cv_risk: blocking has no blocks");
    std::int64_t total = 0;
    std::int64_t sum_sq = 0;
    for (const auto& block : blocking.blocks) {
        const std::int64_t size = static_cast<std::int64_t>(block.size());
        total += size;
        sum_sq += size * size;
    }
    if (total != n)
        throw std::invalid_argument("cv_risk: block sizes do not sum to the vertex count");

    // Exact integer rearrangement of 2K/(n-1) - K(n+1)/(n-1) * sum (|B_j|/n)^2,
    // so that the closed-form values for K = 1 and K = n come out exact.
    const std::int64_t nn = static_cast<std::int64_t>(n);
    const std::int64_t numerator = k_blocks * (2 * nn * nn - (nn + 1) * sum_sq);
    const std::int64_t denominator = nn * nn * (nn - 1);
    return static_cast<double>(numerator) / static_cast<double>(denominator);
}

DeltaSelection select_delta(const GraphSampleSet& samples, const DeltaGrid& grid,
                            const NeighborhoodPolicy& policy, Rng& rng) {
    grid.validate();
    const SliceDistance engine(samples);
    const std::uint64_t base = rng.next_u64();

    DeltaSelection sel;
    const int count = static_cast<int>(grid.values.size());
    sel.risks.resize(count);
    sel.block_counts.resize(count);

    std::vector<Blocking> blockings(count);
    for (int idx = 0; idx < count; ++idx) {
        Rng sub(mix64(base, static_cast<std::uint64_t>(idx)));
        blockings[idx] = cluster(engine, grid.values[idx], policy, sub);
        sel.risks[idx] = cv_risk(blockings[idx], samples.n);
        sel.block_counts[idx] = blockings[idx].block_count();
    }

    int best = 0;
    for (int idx = 1; idx < count; ++idx)
        if (sel.risks[idx] < sel.risks[best]) best = idx;

    sel.selected_index = best;
    sel.delta = grid.values[best];
    sel.blocking = std::move(blockings[best]);
    return sel;
}

}  // namespace sba

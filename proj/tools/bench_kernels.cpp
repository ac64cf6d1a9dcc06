// Benchmark comparing the straightforward reference implementations against
// the precomputed / OpenMP kernels, with a max-abs-difference sanity check.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cmath>
#include <vector>

#include <omp.h>

#include "sba/cluster.hpp"
#include "sba/distance.hpp"
#include "sba/graphon.hpp"
#include "sba/reference.hpp"
#include "sba/rng.hpp"
#include "sba/sample.hpp"

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

}  // namespace

int main(int argc, char** argv) {
    int n = 300;
    int half = 1;
    if (argc > 1) n = std::atoi(argv[1]);
    if (argc > 2) half = std::atoi(argv[2]);
    if (n < 8 || half < 1) {
        std::fprintf(stderr, "usage: %s [n >= 8] [T >= 1]\n", argv[0]);
        return 1;
    }

    std::printf("n=%d 2T=%d threads=%d\n", n, 2 * half, omp_get_max_threads());

    sba::Rng rng(20240817);
    const sba::Graphon g = sba::Graphon::random_block_model(4, rng);
    const std::vector<double> labels = sba::sample_labels(n, rng);
    const sba::GraphSampleSet set = sba::sample_graphs(g, labels, 2 * half, true, rng);

    // Kernel 1: all pairwise distance estimates (full neighborhood).
    double t0 = now_ms();
    std::vector<double> naive(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            naive[static_cast<std::size_t>(i) * n + j] = sba::ref::naive_distance_full(set, i, j);
    const double naive_ms = now_ms() - t0;

    t0 = now_ms();
    const sba::SliceDistance engine(set);
    std::vector<double> fast(static_cast<std::size_t>(n) * n, 0.0);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            fast[static_cast<std::size_t>(i) * n + j] = engine.statistic_full(i, j);
    const double fast_ms = now_ms() - t0;

    double max_diff = 0.0;
    for (std::size_t idx = 0; idx < naive.size(); ++idx)
        max_diff = std::max(max_diff, std::fabs(naive[idx] - fast[idx]));
    std::printf("pairwise distances: reference %.1f ms, kernel %.1f ms, speedup %.1fx, max|diff| %.3g\n",
                naive_ms, fast_ms, naive_ms / fast_ms, max_diff);

    // Kernel 2: block-probability histogram over a balanced 4-way split.
    sba::Blocking blocking;
    blocking.delta = 0.25;
    blocking.blocks.assign(4, {});
    for (int v = 0; v < n; ++v) blocking.blocks[v % 4].push_back(v);
    for (int b = 0; b < 4; ++b) blocking.pivots.push_back(blocking.blocks[b].front());

    t0 = now_ms();
    const sba::Matrix ref_probs = sba::ref::naive_block_probabilities(set, blocking.blocks);
    const double ref_hist_ms = now_ms() - t0;

    t0 = now_ms();
    const sba::EstimatedGraphon est = sba::estimate_block_probabilities(set, blocking);
    const double fast_hist_ms = now_ms() - t0;

    max_diff = 0.0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            max_diff = std::max(max_diff, std::fabs(ref_probs(a, b) - est.block_probs(a, b)));
    std::printf("block histogram:    reference %.1f ms, kernel %.1f ms, speedup %.1fx, max|diff| %.3g\n",
                ref_hist_ms, fast_hist_ms, ref_hist_ms / fast_hist_ms, max_diff);
    return 0;
}

#include "sba/distance.hpp"

#include <stdexcept>

namespace sba {

namespace {

void check_observation_count(const GraphSampleSet& samples) {
    if (samples.num_observations() < 2 || samples.num_observations() % 2 != 0)
        throw std::invalid_argument("distance: sample set needs an even number (>= 2) of observations");
}

void check_vertex(const GraphSampleSet& samples, int v, const char* what) {
    if (v < 0 || v >= samples.n)
        throw std::invalid_argument(std::string("distance: vertex index out of range: ") + what);
}

}  // namespace

std::pair<double, double> slice_products(const GraphSampleSet& samples, int i, int j,
                                         int k) {
    check_observation_count(samples);
    check_vertex(samples, i, "i");
    check_vertex(samples, j, "j");
    check_vertex(samples, k, "k");
    if (i == j || i == k || j == k)
        throw std::invalid_argument("slice_products: i, j, k must be pairwise distinct");

    const int half = samples.half();
    std::int64_t r_first = 0, r_second = 0, c_first = 0, c_second = 0;
    for (int t = 0; t < half; ++t) {
        r_first += samples.observations[t](i, k);
        c_first += samples.observations[t](k, i);
    }
    for (int t = half; t < 2 * half; ++t) {
        r_second += samples.observations[t](j, k);
        c_second += samples.observations[t](k, j);
    }
    const double t2 = static_cast<double>(half) * half;
    return {r_first * r_second / t2, c_first * c_second / t2};
}

SliceDistance::SliceDistance(const GraphSampleSet& samples) {
    check_observation_count(samples);
    n_ = samples.n;
    half_ = samples.half();
    const std::size_t cells = static_cast<std::size_t>(n_) * n_;
    row_first_.assign(cells, 0);
    row_second_.assign(cells, 0);
    col_first_.assign(cells, 0);
    col_second_.assign(cells, 0);

#pragma omp parallel for schedule(static)
    for (int i = 0; i < n_; ++i) {
        std::int32_t* rf = &row_first_[static_cast<std::size_t>(i) * n_];
        std::int32_t* rs = &row_second_[static_cast<std::size_t>(i) * n_];
        std::int32_t* cf = &col_first_[static_cast<std::size_t>(i) * n_];
        std::int32_t* cs = &col_second_[static_cast<std::size_t>(i) * n_];
        for (int t = 0; t < half_; ++t) {
            const BinaryMatrix& obs = samples.observations[t];
            const std::uint8_t* row = obs.row(i);
            for (int k = 0; k < n_; ++k) {
                rf[k] += row[k];
                cf[k] += obs(k, i);
            }
        }
        for (int t = half_; t < 2 * half_; ++t) {
            const BinaryMatrix& obs = samples.observations[t];
            const std::uint8_t* row = obs.row(i);
            for (int k = 0; k < n_; ++k) {
                rs[k] += row[k];
                cs[k] += obs(k, i);
            }
        }
    }
}

double SliceDistance::statistic_full(int i, int j) const {
    const std::int32_t* ri1 = &row_first_[static_cast<std::size_t>(i) * n_];
    const std::int32_t* ri2 = &row_second_[static_cast<std::size_t>(i) * n_];
    const std::int32_t* rj1 = &row_first_[static_cast<std::size_t>(j) * n_];
    const std::int32_t* rj2 = &row_second_[static_cast<std::size_t>(j) * n_];
    const std::int32_t* ci1 = &col_first_[static_cast<std::size_t>(i) * n_];
    const std::int32_t* ci2 = &col_second_[static_cast<std::size_t>(i) * n_];
    const std::int32_t* cj1 = &col_first_[static_cast<std::size_t>(j) * n_];
    const std::int32_t* cj2 = &col_second_[static_cast<std::size_t>(j) * n_];

    std::int64_t acc = 0;
    for (int k = 0; k < n_; ++k) {
        if (k == i || k == j) continue;
        acc += static_cast<std::int64_t>(ri1[k] - rj1[k]) * (ri2[k] - rj2[k]);
        acc += static_cast<std::int64_t>(ci1[k] - cj1[k]) * (ci2[k] - cj2[k]);
    }
    const double t2 = static_cast<double>(half_) * half_;
    return static_cast<double>(acc) / (2.0 * (n_ - 2) * t2);
}

double SliceDistance::statistic(int i, int j, const int* probes, int count) const {
    if (count < 1) throw std::invalid_argument("SliceDistance: empty probe set");
    const std::int32_t* ri1 = &row_first_[static_cast<std::size_t>(i) * n_];
    const std::int32_t* ri2 = &row_second_[static_cast<std::size_t>(i) * n_];
    const std::int32_t* rj1 = &row_first_[static_cast<std::size_t>(j) * n_];
    const std::int32_t* rj2 = &row_second_[static_cast<std::size_t>(j) * n_];
    const std::int32_t* ci1 = &col_first_[static_cast<std::size_t>(i) * n_];
    const std::int32_t* ci2 = &col_second_[static_cast<std::size_t>(i) * n_];
    const std::int32_t* cj1 = &col_first_[static_cast<std::size_t>(j) * n_];
    const std::int32_t* cj2 = &col_second_[static_cast<std::size_t>(j) * n_];

    std::int64_t acc = 0;
    for (int p = 0; p < count; ++p) {
        const int k = probes[p];
        acc += static_cast<std::int64_t>(ri1[k] - rj1[k]) * (ri2[k] - rj2[k]);
        acc += static_cast<std::int64_t>(ci1[k] - cj1[k]) * (ci2[k] - cj2[k]);
    }
    const double t2 = static_cast<double>(half_) * half_;
    return static_cast<double>(acc) / (2.0 * count * t2);
}

std::vector<int> SliceDistance::draw_probes(int i, int j, const NeighborhoodPolicy& policy,
                                            Rng& rng) const {
    std::vector<int> probes;
    probes.reserve(n_ - 2);
    for (int k = 0; k < n_; ++k)
        if (k != i && k != j) probes.push_back(k);
    if (policy.mode == NeighborhoodPolicy::Mode::Full) return probes;

    const int avail = static_cast<int>(probes.size());
    if (policy.subset_size < 1 || policy.subset_size > avail)
        throw std::invalid_argument("NeighborhoodPolicy: subset size must be in [1, n - 2]");
    for (int idx = 0; idx < policy.subset_size; ++idx) {
        const int pick = idx + static_cast<int>(rng.next_index(avail - idx));
        std::swap(probes[idx], probes[pick]);
    }
    probes.resize(policy.subset_size);
    return probes;
}

double SliceDistance::estimate(int i, int j, const NeighborhoodPolicy& policy,
                               Rng& rng) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_)
        throw std::invalid_argument("SliceDistance: vertex index out of range");
    if (i == j) throw std::invalid_argument("SliceDistance: i and j must differ");
    if (n_ < 3)
        throw std::invalid_argument("SliceDistance: need n >= 3 for a nonempty probe set");
    if (policy.mode == NeighborhoodPolicy::Mode::Full) return statistic_full(i, j);
    const std::vector<int> probes = draw_probes(i, j, policy, rng);
    return statistic(i, j, probes.data(), static_cast<int>(probes.size()));
}

double estimate_distance(const GraphSampleSet& samples, int i, int j,
                         const NeighborhoodPolicy& policy, Rng& rng) {
    return SliceDistance(samples).estimate(i, j, policy, rng);
}

double exact_distance(const Graphon& g, double u_i, double u_j) {
    if (!(u_i >= 0.0 && u_i <= 1.0) || !(u_j >= 0.0 && u_j <= 1.0))
        throw std::invalid_argument("exact_distance: positions must lie in [0,1]");

    if (g.is_block_model()) {
        const int a = g.block_of(u_i);
        const int b = g.block_of(u_j);
        const Matrix& w = g.probabilities();
        const std::vector<double>& bounds = g.boundaries();
        double col_part = 0.0, row_part = 0.0;
        for (int c = 0; c < g.block_count(); ++c) {
            const double len = bounds[c + 1] - bounds[c];
            const double dc = w(c, a) - w(c, b);
            const double dr = w(a, c) - w(b, c);
            col_part += len * dc * dc;
            row_part += len * dr * dr;
        }
        return 0.5 * (col_part + row_part);
    }

    constexpr int panels = 4096;
    double col_part = 0.0, row_part = 0.0;
    for (int m = 0; m < panels; ++m) {
        const double x = (m + 0.5) / panels;
        const double dc = g.eval(x, u_i) - g.eval(x, u_j);
        const double dr = g.eval(u_i, x) - g.eval(u_j, x);
        col_part += dc * dc;
        row_part += dr * dr;
    }
    return 0.5 * (col_part + row_part) / panels;
}

}  // namespace sba

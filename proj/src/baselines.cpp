#include "sba/baselines.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace sba {

BaselineEstimate usvt(const Matrix& adjacency_mean, double eta) {
    if (!adjacency_mean.is_square())
        throw std::invalid_argument("usvt: input matrix must be square");
    const int n = adjacency_mean.rows();
    if (n < 2) throw std::invalid_argument("usvt: need n >= 2");
    if (!(eta > 0.0)) throw std::invalid_argument("usvt: eta must be positive");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(adjacency_mean(i, j) >= 0.0 && adjacency_mean(i, j) <= 1.0))
                throw std::invalid_argument("usvt: entries must lie in [0,1]");

    Eigen::MatrixXd shifted(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) shifted(i, j) = 2.0 * adjacency_mean(i, j) - 1.0;

    Eigen::BDCSVD<Eigen::MatrixXd> svd(shifted, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const double threshold = (2.0 + eta) * std::sqrt(static_cast<double>(n));

    Eigen::VectorXd sigma = svd.singularValues();
    int retained = 0;
    for (int s = 0; s < sigma.size(); ++s) {
        if (sigma(s) < threshold)
            sigma(s) = 0.0;
        else
            ++retained;
    }
    const Eigen::MatrixXd reconstructed =
        svd.matrixU() * sigma.asDiagonal() * svd.matrixV().transpose();

    BaselineEstimate est;
    est.method = BaselineMethod::USVT;
    est.eta = eta;
    est.rank_retained = retained;
    est.matrix = Matrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double p = (reconstructed(i, j) + 1.0) / 2.0;
            est.matrix(i, j) = std::clamp(p, 0.0, 1.0);
        }
    return est;
}

BaselineEstimate largest_gap(const BinaryMatrix& adjacency, int k_blocks) {
    const int n = adjacency.size();
    if (k_blocks < 1 || k_blocks > n)
        throw std::invalid_argument("largest_gap: k_blocks must lie in [1, n]");

    std::vector<double> degree(n, 0.0);
    for (int i = 0; i < n; ++i) {
        int d = 0;
        for (int j = 0; j < n; ++j)
            if (j != i) d += adjacency(i, j);
        degree[i] = n > 1 ? static_cast<double>(d) / (n - 1) : 0.0;
    }

    // Vertices in ascending normalized-degree order, ties by index.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return degree[a] < degree[b]; });

    // Positions of the k_blocks - 1 largest consecutive gaps in the sorted
    // sequence; ties broken toward the earlier position.
    std::vector<int> gap_pos(n > 0 ? n - 1 : 0);
    std::iota(gap_pos.begin(), gap_pos.end(), 0);
    std::stable_sort(gap_pos.begin(), gap_pos.end(), [&](int a, int b) {
        const double ga = degree[order[a + 1]] - degree[order[a]];
        const double gb = degree[order[b + 1]] - degree[order[b]];
        return ga > gb;
    });
    std::vector<int> cuts(gap_pos.begin(), gap_pos.begin() + (k_blocks - 1));
    std::sort(cuts.begin(), cuts.end());

    // Contiguous runs of the sorted order between cuts become blocks.
    std::vector<std::vector<int>> blocks;
    blocks.reserve(k_blocks);
    int start = 0;
    for (int c = 0; c < k_blocks; ++c) {
        const int stop = c + 1 < k_blocks ? cuts[c] + 1 : n;
        std::vector<int> block(order.begin() + start, order.begin() + stop);
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
        start = stop;
    }

    BaselineEstimate est;
    est.method = BaselineMethod::LargestGap;
    est.k_blocks = k_blocks;
    est.assignment.assign(n, -1);
    for (int b = 0; b < k_blocks; ++b)
        for (int v : blocks[b]) est.assignment[v] = b;

    // Empirical edge frequency per block pair, averaging over every ordered
    // vertex pair (diagonal included) in the single observation.
    Matrix probs(k_blocks, k_blocks);
    for (int a = 0; a < k_blocks; ++a)
        for (int b = 0; b < k_blocks; ++b) {
            std::int64_t edges = 0;
            for (int i : blocks[a])
                for (int j : blocks[b]) edges += adjacency(i, j);
            const std::int64_t slots =
                static_cast<std::int64_t>(blocks[a].size()) * blocks[b].size();
            probs(a, b) = static_cast<double>(edges) / static_cast<double>(slots);
        }

    est.matrix = Matrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            est.matrix(i, j) = probs(est.assignment[i], est.assignment[j]);
    return est;
}

}  // namespace sba

#pragma once

#include <vector>

#include "sba/matrix.hpp"

namespace sba {

enum class BaselineMethod { USVT, LargestGap };

struct BaselineEstimate {
    Matrix matrix;  // n x n estimated edge probabilities, clipped to [0,1]
    BaselineMethod method = BaselineMethod::USVT;
    double eta = 0.0;       // USVT threshold slack
    int k_blocks = 0;       // LargestGap block count
    int rank_retained = 0;  // USVT: singular values kept after thresholding
    std::vector<int> assignment;  // LargestGap: vertex -> block index
};

// Universal singular value thresholding. Shifts the input (entries in [0,1])
// to [-1,1] via 2A - 1, zeroes every singular value strictly below
// (2 + eta) * sqrt(n), reconstructs, maps back via (A'' + 1) / 2, and clips
// to [0,1].
BaselineEstimate usvt(const Matrix& adjacency_mean, double eta = 0.01);

// Largest-gap blockmodel fit: sorts vertices by normalized degree
// (row sums excluding the diagonal, divided by n - 1), cuts the sorted order
// at the k_blocks - 1 largest consecutive gaps, and fills each block pair
// with its empirical edge frequency in the single observation.
BaselineEstimate largest_gap(const BinaryMatrix& adjacency, int k_blocks);

}  // namespace sba

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "sba/baselines.hpp"
#include "sba/cluster.hpp"
#include "sba/graphon.hpp"
#include "sba/matrix.hpp"

// Mean absolute / squared error between the true graphon evaluated at the
// latent labels and an estimate, averaged over every ordered vertex pair
// including the diagonal. Estimates are compared at matching vertex indices;
// no relabeling or alignment is attempted.

namespace sba {

namespace detail {

template <typename EstFn>
double mean_error(const Graphon& g, const std::vector<double>& labels, EstFn&& est,
                  bool squared) {
    const int n = static_cast<int>(labels.size());
    if (n == 0) throw std::invalid_argument("metrics: empty label list");
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double diff = g.eval(labels[i], labels[j]) - est(i, j);
            acc += squared ? diff * diff : std::fabs(diff);
        }
    return acc / (static_cast<double>(n) * n);
}

}  // namespace detail

// Generic versions taking any (i, j) -> estimate callable.
template <typename EstFn>
double mae_fn(const Graphon& g, const std::vector<double>& labels, EstFn&& est) {
    return detail::mean_error(g, labels, est, false);
}

template <typename EstFn>
double mse_fn(const Graphon& g, const std::vector<double>& labels, EstFn&& est) {
    return detail::mean_error(g, labels, est, true);
}

inline double mae(const Graphon& g, const std::vector<double>& labels,
                  const EstimatedGraphon& est) {
    return mae_fn(g, labels, [&](int i, int j) { return predict(est, i, j); });
}

inline double mse(const Graphon& g, const std::vector<double>& labels,
                  const EstimatedGraphon& est) {
    return mse_fn(g, labels, [&](int i, int j) { return predict(est, i, j); });
}

inline double mae(const Graphon& g, const std::vector<double>& labels, const Matrix& est) {
    if (est.rows() != static_cast<int>(labels.size()) || !est.is_square())
        throw std::invalid_argument("metrics: estimate matrix shape mismatch");
    return mae_fn(g, labels, [&](int i, int j) { return est(i, j); });
}

inline double mse(const Graphon& g, const std::vector<double>& labels, const Matrix& est) {
    if (est.rows() != static_cast<int>(labels.size()) || !est.is_square())
        throw std::invalid_argument("metrics: estimate matrix shape mismatch");
    return mse_fn(g, labels, [&](int i, int j) { return est(i, j); });
}

inline double mae(const Graphon& g, const std::vector<double>& labels,
                  const BaselineEstimate& est) {
    return mae(g, labels, est.matrix);
}

inline double mse(const Graphon& g, const std::vector<double>& labels,
                  const BaselineEstimate& est) {
    return mse(g, labels, est.matrix);
}

}  // namespace sba

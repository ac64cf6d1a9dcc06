#include "sba/graphon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sba {

Graphon Graphon::block_model(std::vector<double> boundaries, Matrix probabilities) {
    if (boundaries.size() < 2)
        throw std::invalid_argument("block_model: need at least 2 boundaries");
    if (boundaries.front() != 0.0 || boundaries.back() != 1.0)
        throw std::invalid_argument("block_model: boundaries must start at 0 and end at 1");
    for (std::size_t i = 1; i < boundaries.size(); ++i)
        if (!(boundaries[i] > boundaries[i - 1]))
            throw std::invalid_argument("block_model: boundaries must be strictly increasing");
    const int k = static_cast<int>(boundaries.size()) - 1;
    if (probabilities.rows() != k || probabilities.cols() != k)
        throw std::invalid_argument("block_model: probability matrix must be K x K");
    for (double p : probabilities.data())
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("block_model: probabilities must lie in [0,1]");

    Graphon g;
    g.is_block_model_ = true;
    g.boundaries_ = std::move(boundaries);
    g.probabilities_ = std::move(probabilities);
    bool sym = true;
    for (int a = 0; a < k && sym; ++a)
        for (int b = a + 1; b < k; ++b)
            if (g.probabilities_(a, b) != g.probabilities_(b, a)) {
                sym = false;
                break;
            }
    g.symmetric_hint_ = sym;
    return g;
}

Graphon Graphon::formula(Formula f) {
    Graphon g;
    g.is_block_model_ = false;
    g.formula_ = f;
    g.symmetric_hint_ = true;  // both closed forms are symmetric in (u, v)
    return g;
}

Graphon Graphon::random_block_model(int k, Rng& rng) {
    if (k < 1) throw std::invalid_argument("random_block_model: k must be positive");
    std::vector<double> bounds(k + 1);
    for (int i = 0; i <= k; ++i) bounds[i] = static_cast<double>(i) / k;
    Matrix probs(k, k);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) probs(a, b) = rng.next_double();
    return block_model(std::move(bounds), std::move(probs));
}

int Graphon::block_count() const {
    return is_block_model_ ? static_cast<int>(boundaries_.size()) - 1 : 0;
}

int Graphon::block_of(double x) const {
    const int k = block_count();
    // upper_bound gives the first boundary > x; the interval left of it owns x.
    // x == 1 lands past the end and is folded into the last (closed) interval.
    auto it = std::upper_bound(boundaries_.begin(), boundaries_.end(), x);
    int idx = static_cast<int>(it - boundaries_.begin()) - 1;
    if (idx >= k) idx = k - 1;
    return idx;
}

double Graphon::eval(double x, double y) const {
    if (!(x >= 0.0 && x <= 1.0 && y >= 0.0 && y <= 1.0))
        throw std::invalid_argument("Graphon::eval: coordinates must lie in [0,1]");
    if (is_block_model_) return probabilities_(block_of(x), block_of(y));
    switch (formula_) {
        case Formula::W1Logistic:
            return 1.0 / (1.0 + std::exp(-50.0 * (x * x + y * y)));
        case Formula::W2Product:
            return x * y;
    }
    throw std::logic_error("Graphon::eval: unknown formula");
}

std::string formula_name(Formula f) {
    switch (f) {
        case Formula::W1Logistic: return "w1_logistic";
        case Formula::W2Product: return "w2_product";
    }
    throw std::logic_error("formula_name: unknown formula");
}

Formula formula_from_name(const std::string& name) {
    if (name == "w1_logistic") return Formula::W1Logistic;
    if (name == "w2_product") return Formula::W2Product;
    throw std::invalid_argument("unknown formula graphon: " + name);
}

}  // namespace sba

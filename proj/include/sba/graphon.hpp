#ifndef SBA_GRAPHON_HPP
#define SBA_GRAPHON_HPP

#include <string>
#include <vector>

#include "sba/matrix.hpp"
#include "sba/rng.hpp"

namespace sba {

// Closed-form graphons used in the continuous-model experiments:
//   w1_logistic(u,v) = 1 / (1 + exp(-50 (u^2 + v^2)))
//   w2_product(u,v)  = u v
enum class Formula { W1Logistic, W2Product };

// A graphon w : [0,1]^2 -> [0,1], either a stochastic blockmodel (piecewise
// constant on a grid of intervals) or one of the closed forms above.
//
// Blockmodel interval membership is half-open: x belongs to
// [boundary[k-1], boundary[k]), except the last interval which is closed.
class Graphon {
  public:
    static Graphon block_model(std::vector<double> boundaries, Matrix probabilities);
    static Graphon formula(Formula f);

    // K x K blockmodel on equi-spaced intervals with Uniform[0,1] entries.
    static Graphon random_block_model(int k, Rng& rng);

    bool is_block_model() const { return is_block_model_; }
    bool symmetric_hint() const { return symmetric_hint_; }

    // Number of blocks; 0 for formula graphons.
    int block_count() const;

    // Index of the interval containing x.
    int block_of(double x) const;

    const std::vector<double>& boundaries() const { return boundaries_; }
    const Matrix& probabilities() const { return probabilities_; }
    Formula formula_kind() const { return formula_; }

    // w(x, y); throws std::invalid_argument outside [0,1]^2.
    double eval(double x, double y) const;

  private:
    Graphon() = default;

    bool is_block_model_ = false;
    bool symmetric_hint_ = false;
    std::vector<double> boundaries_;
    Matrix probabilities_;
    Formula formula_ = Formula::W2Product;
};

std::string formula_name(Formula f);
Formula formula_from_name(const std::string& name);

}  // namespace sba

#endif

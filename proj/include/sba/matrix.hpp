#ifndef SBA_MATRIX_HPP
#define SBA_MATRIX_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sba {

// Dense row-major matrix of doubles.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    double& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    double operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

    bool is_square() const { return rows_ == cols_; }

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> data_;
};

// Dense square binary adjacency matrix; entries are exactly 0 or 1.
class BinaryMatrix {
  public:
    BinaryMatrix() = default;
    explicit BinaryMatrix(int n, std::uint8_t fill = 0)
        : n_(n), data_(static_cast<std::size_t>(n) * n, fill) {
        if (n < 0) throw std::invalid_argument("BinaryMatrix: negative dimension");
    }

    int size() const { return n_; }

    std::uint8_t operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * n_ + j];
    }
    void set(int i, int j, std::uint8_t v) {
        data_[static_cast<std::size_t>(i) * n_ + j] = v;
    }

    const std::uint8_t* row(int i) const { return data_.data() + static_cast<std::size_t>(i) * n_; }

    bool is_symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool operator==(const BinaryMatrix& o) const { return n_ == o.n_ && data_ == o.data_; }

  private:
    int n_ = 0;
    std::vector<std::uint8_t> data_;
};

}  // namespace sba

#endif

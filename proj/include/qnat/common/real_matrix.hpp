// Row-major real matrix. Doubles as the per-batch measurement outcome
// container: rows = batch samples, columns = qubits.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qnat {

class RMatrix {
  public:
    RMatrix() = default;
    RMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const double& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    bool same_shape(const RMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    void require_same_shape(const RMatrix& other) const {
        if (!same_shape(other)) throw std::invalid_argument("RMatrix: shape mismatch");
    }

    RMatrix operator-(const RMatrix& rhs) const {
        require_same_shape(rhs);
        RMatrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
        return out;
    }

    RMatrix operator+(const RMatrix& rhs) const {
        require_same_shape(rhs);
        RMatrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
        return out;
    }

    double squared_frobenius() const {
        double s = 0.0;
        for (double v : data_) s += v * v;
        return s;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

// Per-qubit Pauli-Z expectations across a batch of inputs.
using OutcomeBatch = RMatrix;

}  // namespace qnat

// Dense complex matrices used by the quantum simulation core.
// Row-major storage, double precision throughout.

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace qnat {

using cplx = std::complex<double>;

class CMatrix {
  public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}

    CMatrix(std::size_t rows, std::size_t cols, std::initializer_list<cplx> values)
        : rows_(rows), cols_(cols), data_(values) {
        if (data_.size() != rows * cols) {
            throw std::invalid_argument("CMatrix: initializer size mismatch");
        }
    }

    static CMatrix identity(std::size_t n) {
        CMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<cplx>& data() { return data_; }
    const std::vector<cplx>& data() const { return data_; }

    CMatrix dagger() const {
        CMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
        return out;
    }

    CMatrix transpose() const {
        CMatrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    CMatrix operator*(const CMatrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("CMatrix: dimension mismatch in product");
        CMatrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i) {
            for (std::size_t k = 0; k < cols_; ++k) {
                const cplx a = (*this)(i, k);
                if (a == cplx{0.0, 0.0}) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j) {
                    out(i, j) += a * rhs(k, j);
                }
            }
        }
        return out;
    }

    CMatrix operator+(const CMatrix& rhs) const {
        check_same_shape(rhs);
        CMatrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
        return out;
    }

    CMatrix operator-(const CMatrix& rhs) const {
        check_same_shape(rhs);
        CMatrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
        return out;
    }

    CMatrix& operator+=(const CMatrix& rhs) {
        check_same_shape(rhs);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
        return *this;
    }

    CMatrix operator*(cplx s) const {
        CMatrix out = *this;
        for (auto& v : out.data_) v *= s;
        return out;
    }

    cplx trace() const {
        if (!square()) throw std::invalid_argument("CMatrix: trace of non-square matrix");
        cplx t{0.0, 0.0};
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : data_) m = std::max(m, std::abs(v));
        return m;
    }

    bool is_hermitian(double tol) const {
        if (!square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i; j < cols_; ++j)
                if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
        return true;
    }

    bool is_unitary(double tol) const {
        if (!square()) return false;
        CMatrix prod = dagger() * (*this);
        return max_abs_diff(prod, identity(rows_)) <= tol;
    }

    static CMatrix kron(const CMatrix& a, const CMatrix& b) {
        CMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j)
                for (std::size_t k = 0; k < b.rows_; ++k)
                    for (std::size_t l = 0; l < b.cols_; ++l)
                        out(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
        return out;
    }

    static double max_abs_diff(const CMatrix& a, const CMatrix& b) {
        a.check_same_shape(b);
        double m = 0.0;
        for (std::size_t i = 0; i < a.data_.size(); ++i)
            m = std::max(m, std::abs(a.data_[i] - b.data_[i]));
        return m;
    }

  private:
    void check_same_shape(const CMatrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw std::invalid_argument("CMatrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

inline CMatrix operator*(cplx s, const CMatrix& m) { return m * s; }

// Pauli matrices and friends.
inline CMatrix pauli_i() { return CMatrix::identity(2); }
inline CMatrix pauli_x() { return CMatrix(2, 2, {0, 1, 1, 0}); }
inline CMatrix pauli_y() { return CMatrix(2, 2, {0, cplx{0, -1}, cplx{0, 1}, 0}); }
inline CMatrix pauli_z() { return CMatrix(2, 2, {1, 0, 0, -1}); }

// Compares two matrices modulo a global phase factor: b == e^{i phi} a.
inline bool equal_up_to_global_phase(const CMatrix& a, const CMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    // Anchor the phase on the largest entry of a.
    std::size_t best = 0;
    double best_abs = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        if (std::abs(a.data()[i]) > best_abs) {
            best_abs = std::abs(a.data()[i]);
            best = i;
        }
    }
    if (best_abs < tol) return b.max_abs() < tol;
    cplx phase = b.data()[best] / a.data()[best];
    double mag = std::abs(phase);
    if (std::abs(mag - 1.0) > tol) return false;
    phase /= mag;
    return CMatrix::max_abs_diff(a * phase, b) <= tol;
}

}  // namespace qnat

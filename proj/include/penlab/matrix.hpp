#pragma once

// Dense rectangular matrices over an exact ring (Gaussian rationals or
// polynomials over them), plus exact Gaussian elimination for the field case.

#include "penlab/gaussian.hpp"
#include "penlab/poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace penlab {

template <typename T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    // Reverse identity: ones on the anti-diagonal.
    static Mat reverseIdentity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, n - 1 - i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool isSquare() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Mat operator-() const {
        Mat m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = -data_[k];
        return m;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        requireSameShape(a, b);
        Mat m(a.rows_, a.cols_);
        for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] = a.data_[k] + b.data_[k];
        return m;
    }

    friend Mat operator-(const Mat& a, const Mat& b) {
        requireSameShape(a, b);
        Mat m(a.rows_, a.cols_);
        for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] = a.data_[k] - b.data_[k];
        return m;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
        Mat m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
            }
        return m;
    }

    Mat scaled(const T& c) const {
        Mat m(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = data_[k] * c;
        return m;
    }

    Mat transpose() const {
        Mat m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    bool isZero() const {
        for (const T& x : data_)
            if (!(x == T(0))) return false;
        return true;
    }

    // Direct sum: this ⊕ other on the block diagonal.
    Mat directSum(const Mat& other) const {
        Mat m(rows_ + other.rows_, cols_ + other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
        for (std::size_t i = 0; i < other.rows_; ++i)
            for (std::size_t j = 0; j < other.cols_; ++j) m(rows_ + i, cols_ + j) = other(i, j);
        return m;
    }

  private:
    static void requireSameShape(const Mat& a, const Mat& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw std::invalid_argument("matrix sum: shape mismatch");
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

using Matrix = Mat<GaussianRational>;
using PolyMatrix = Mat<Poly>;
using Vector = std::vector<GaussianRational>;

Matrix conjTranspose(const Matrix& m);

// Exact Gaussian elimination over Q(i).
std::size_t rank(Matrix m);
GaussianRational det(Matrix m);
// Throws DivisionByZero when the matrix is singular.
Matrix inverse(const Matrix& m);

PolyMatrix toPolyMatrix(const Matrix& m);
Matrix evalPolyMatrix(const PolyMatrix& m, const GaussianRational& x);

// Outer products u * v^T and u * v^* for plain vectors.
Matrix outer(const Vector& u, const Vector& v);
Matrix outerConj(const Vector& u, const Vector& v);

}  // namespace penlab

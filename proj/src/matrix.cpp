#include "penlab/matrix.hpp"

namespace penlab {

Matrix conjTranspose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j).conj();
    return t;
}

std::size_t rank(Matrix m) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, col).isZero()) ++pivot;
        if (pivot == m.rows()) continue;
        for (std::size_t j = col; j < m.cols(); ++j) std::swap(m(r, j), m(pivot, j));
        const GaussianRational inv = m(r, col).inverse();
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, col).isZero()) continue;
            const GaussianRational f = m(i, col) * inv;
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

GaussianRational det(Matrix m) {
    if (!m.isSquare()) throw std::invalid_argument("det: matrix not square");
    const std::size_t n = m.rows();
    GaussianRational result(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m(pivot, col).isZero()) ++pivot;
        if (pivot == n) return GaussianRational();
        if (pivot != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(m(col, j), m(pivot, j));
            result = -result;
        }
        result *= m(col, col);
        const GaussianRational inv = m(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col).isZero()) continue;
            const GaussianRational f = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return result;
}

Matrix inverse(const Matrix& m) {
    if (!m.isSquare()) throw std::invalid_argument("inverse: matrix not square");
    const std::size_t n = m.rows();
    Matrix a = m;
    Matrix inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).isZero()) ++pivot;
        if (pivot == n) throw DivisionByZero();
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(col, j), a(pivot, j));
                std::swap(inv(col, j), inv(pivot, j));
            }
        }
        const GaussianRational d = a(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) *= d;
            inv(col, j) *= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col).isZero()) continue;
            const GaussianRational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

PolyMatrix toPolyMatrix(const Matrix& m) {
    PolyMatrix p(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = Poly(m(i, j));
    return p;
}

Matrix evalPolyMatrix(const PolyMatrix& m, const GaussianRational& x) {
    Matrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).eval(x);
    return r;
}

Matrix outer(const Vector& u, const Vector& v) {
    Matrix m(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
    return m;
}

Matrix outerConj(const Vector& u, const Vector& v) {
    Matrix m(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j].conj();
    return m;
}

}  // namespace penlab

/*
 * Dense matrices over an arbitrary commutative semiring: the linear-algebra
 * substrate for TQFT evaluation. Tensor products use the left-major index
 * convention: in tensor(f, g) the left factor's index is the most
 * significant digit of the combined index.
 */

#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tqft/semiring.hpp"

namespace tqft {

/// Ordered basis labels of a free module (state names, typically).
struct Basis {
    std::vector<std::string> labels;
    int dim() const { return static_cast<int>(labels.size()); }
};

template <Semiring R>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), e_(static_cast<std::size_t>(rows) * cols, R::zero()) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = R::one();
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    R& at(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    const R& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_) return false;
        for (std::size_t k = 0; k < x.e_.size(); ++k)
            if (!(x.e_[k] == y.e_[k])) return false;
        return true;
    }

    std::string json() const {
        std::ostringstream out;
        out << "{\"rows\": " << rows_ << ", \"cols\": " << cols_ << ", \"entries\": [";
        for (std::size_t k = 0; k < e_.size(); ++k) {
            if (k) out << ", ";
            out << '"' << e_[k].text() << '"';
        }
        out << "]}";
        return out.str();
    }

private:
    int rows_, cols_;
    std::vector<R> e_;
};

/// Matrix product f.g (f after g); requires f.cols == g.rows.
template <Semiring R>
Matrix<R> compose(const Matrix<R>& f, const Matrix<R>& g) {
    if (f.cols() != g.rows())
        throw std::invalid_argument("compose: dimension mismatch " +
                                    std::to_string(f.cols()) + " vs " + std::to_string(g.rows()));
    Matrix<R> r(f.rows(), g.cols());
    for (int i = 0; i < f.rows(); ++i)
        for (int k = 0; k < f.cols(); ++k) {
            const R& fik = f.at(i, k);
            if (fik == R::zero()) continue;
            for (int j = 0; j < g.cols(); ++j)
                r.at(i, j) = r.at(i, j) + fik * g.at(k, j);
        }
    return r;
}

/// Kronecker product, left factor major.
template <Semiring R>
Matrix<R> tensor(const Matrix<R>& f, const Matrix<R>& g) {
    Matrix<R> r(f.rows() * g.rows(), f.cols() * g.cols());
    for (int i1 = 0; i1 < f.rows(); ++i1)
        for (int j1 = 0; j1 < f.cols(); ++j1)
            for (int i2 = 0; i2 < g.rows(); ++i2)
                for (int j2 = 0; j2 < g.cols(); ++j2)
                    r.at(i1 * g.rows() + i2, j1 * g.cols() + j2) = f.at(i1, j1) * g.at(i2, j2);
    return r;
}

template <Semiring R>
Matrix<R> transpose(const Matrix<R>& f) {
    Matrix<R> r(f.cols(), f.rows());
    for (int i = 0; i < f.rows(); ++i)
        for (int j = 0; j < f.cols(); ++j) r.at(j, i) = f.at(i, j);
    return r;
}

template <Semiring R>
R trace(const Matrix<R>& f) {
    if (f.rows() != f.cols()) throw std::invalid_argument("trace: non-square matrix");
    R s = R::zero();
    for (int i = 0; i < f.rows(); ++i) s = s + f.at(i, i);
    return s;
}

/// coev: 1 -> n^2 column vector, entry 1 exactly at the (q, q) multi-indices.
template <Semiring R>
Matrix<R> coev_map(int n) {
    Matrix<R> m(n * n, 1);
    for (int i = 0; i < n; ++i) m.at(i * n + i, 0) = R::one();
    return m;
}

/// ev: n^2 -> 1 row vector, entry 1 exactly at the (q, q) multi-indices.
template <Semiring R>
Matrix<R> ev_map(int n) {
    Matrix<R> m(1, n * n);
    for (int i = 0; i < n; ++i) m.at(0, i * n + i) = R::one();
    return m;
}

}  // namespace tqft

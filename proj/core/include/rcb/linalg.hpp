#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "rcb/errors.hpp"
#include "rcb/gaussian.hpp"
#include "rcb/scalar.hpp"

namespace rcb {

template <class S>
using Vector = std::vector<S>;

template <class S>
S dot(const Vector<S>& a, const Vector<S>& b) {
    if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
    S acc{};
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

template <class S>
Vector<S> operator+(const Vector<S>& a, const Vector<S>& b) {
    if (a.size() != b.size()) throw DomainError("vector add: dimension mismatch");
    Vector<S> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

template <class S>
Vector<S> operator-(const Vector<S>& a, const Vector<S>& b) {
    if (a.size() != b.size()) throw DomainError("vector sub: dimension mismatch");
    Vector<S> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

template <class S>
Vector<S> operator*(const S& c, const Vector<S>& a) {
    Vector<S> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

template <class S>
Vector<S> operator-(const Vector<S>& a) {
    Vector<S> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

template <class S>
bool is_zero_vector(const Vector<S>& a) {
    for (const auto& v : a)
        if (!is_zero(v)) return false;
    return true;
}

template <class S>
Vector<S> zero_vector(std::size_t n) {
    return Vector<S>(n, S{});
}

template <class S>
Vector<S> basis_vector(std::size_t n, std::size_t i) {
    Vector<S> r(n, S{});
    r[i] = S(1);
    return r;
}

// Dense row-major matrix over an arbitrary commutative ring.
template <class S>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), d_(rows * cols, S{}) {}
    Matrix(std::initializer_list<std::initializer_list<S>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        d_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DomainError("ragged matrix initializer");
            for (const auto& v : row) d_.push_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t i, std::size_t j) { return d_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return d_[i * cols_ + j]; }

    Vector<S> row(std::size_t i) const {
        Vector<S> r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }
    Vector<S> col(std::size_t j) const {
        Vector<S> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
        return r;
    }
    void set_col(std::size_t j, const Vector<S>& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.d_.size(); ++i) r.d_[i] = a.d_[i] + b.d_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.d_.size(); ++i) r.d_[i] = a.d_[i] - b.d_[i];
        return r;
    }
    friend Matrix operator*(const S& c, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.d_.size(); ++i) r.d_[i] = c * a.d_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DomainError("matmul: dimension mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k)
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
        return r;
    }
    friend Vector<S> operator*(const Matrix& a, const Vector<S>& x) {
        if (a.cols_ != x.size()) throw DomainError("matvec: dimension mismatch");
        Vector<S> r(a.rows_, S{});
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) r[i] += a(i, j) * x[j];
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.d_ == b.d_;
    }

    Matrix transposed() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& v : d_)
            if (!rcb::is_zero(v)) return false;
        return true;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<S> d_;
};

// --- exact Gaussian elimination -------------------------------------------
//
// These routines assume an exact field (Rational or Gaussian<Rational>):
// a pivot is any nonzero entry, and all results are exact.

namespace detail {

// Row echelon form in place; returns pivot column per pivot row.
template <class S>
std::vector<std::size_t> echelon(Matrix<S>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        S inv_pivot = S(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv_pivot;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m(i, c))) continue;
            S f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

template <class S>
std::size_t rank(Matrix<S> m) {
    return detail::echelon(m).size();
}

// Basis of the right null space {x : Mx = 0}.
template <class S>
std::vector<Vector<S>> null_space(Matrix<S> m) {
    const std::size_t n = m.cols();
    auto pivots = detail::echelon(m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vector<S>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vector<S> v(n, S{});
        v[free_col] = S(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Exact solve of Mx = b; empty when the system is inconsistent.  For
// underdetermined systems returns one particular solution.
template <class S>
std::optional<Vector<S>> solve(Matrix<S> m, const Vector<S>& b) {
    if (m.rows() != b.size()) throw DomainError("solve: dimension mismatch");
    const std::size_t n = m.cols();
    Matrix<S> aug(m.rows(), n + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    auto pivots = detail::echelon(aug);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // 0 = 1 row
    Vector<S> x(n, S{});
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, n);
    return x;
}

template <class S>
S determinant(Matrix<S> m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of non-square matrix");
    S det = S(1);
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(m(p, c))) ++p;
        if (p == n) return S{};
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det = det * m(c, c);
        S inv_pivot = S(1) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(m(i, c))) continue;
            S f = m(i, c) * inv_pivot;
            for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return det;
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m) {
    if (m.rows() != m.cols()) throw DomainError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<S> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = S(1);
    }
    auto pivots = detail::echelon(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Matrix<S> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

template <class S>
Matrix<S> matrix_cast_rows(const std::vector<Vector<S>>& rows, std::size_t cols) {
    Matrix<S> m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace rcb

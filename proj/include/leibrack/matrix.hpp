#ifndef LEIBRACK_MATRIX_HPP
#define LEIBRACK_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "leibrack/errors.hpp"
#include "leibrack/scalar.hpp"

namespace leibrack {

template <Scalar T>
using Vector = std::vector<T>;

// Dense row-major matrix. Small sizes only (algebra dimension, or n^3 x n^2
// for the derivation system), so no blocking or expression templates.
template <Scalar T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_columns(std::span<const Vector<T>> columns, std::size_t rows) {
        Matrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows) throw DimensionMismatch("column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector<T> column(std::size_t j) const {
        Vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    Vector<T> row(std::size_t i) const {
        return Vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const T& x) { return leibrack::is_zero(x); });
    }

    template <Scalar U>
    Matrix<U> cast() const {
        Matrix<U> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                if constexpr (std::is_same_v<U, double>)
                    out(i, j) = to_double((*this)(i, j));
                else
                    out(i, j) = U((*this)(i, j));
            }
        return out;
    }

    Matrix& operator+=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
    friend Matrix operator-(Matrix a) { return a *= T(-1); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (leibrack::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Vector<T> operator*(const Matrix& a, const Vector<T>& v) {
        if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
        Vector<T> out(a.rows_, T(0));
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

// ---------------------------------------------------------------------------
// vector helpers

template <Scalar T>
Vector<T> zeros(std::size_t n) {
    return Vector<T>(n, T(0));
}

template <Scalar T>
Vector<T> unit_vector(std::size_t n, std::size_t i) {
    Vector<T> v(n, T(0));
    v.at(i) = T(1);
    return v;
}

template <Scalar T>
Vector<T>& add_in_place(Vector<T>& a, const Vector<T>& b, const T& scale = T(1)) {
    if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
    return a;
}

template <Scalar T>
Vector<T> operator+(Vector<T> a, const Vector<T>& b) {
    return add_in_place(a, b);
}

template <Scalar T>
Vector<T> operator-(Vector<T> a, const Vector<T>& b) {
    return add_in_place(a, b, T(-1));
}

template <Scalar T>
Vector<T> scaled(Vector<T> a, const T& s) {
    for (auto& x : a) x *= s;
    return a;
}

template <Scalar T>
bool is_zero_vector(const Vector<T>& v) {
    return std::all_of(v.begin(), v.end(), [](const T& x) { return is_zero(x); });
}

template <Scalar T>
T dot(const Vector<T>& a, const Vector<T>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
    T s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

template <Scalar T>
double max_abs(const Vector<T>& v) {
    double m = 0.0;
    for (const auto& x : v) m = std::max(m, std::fabs(to_double(x)));
    return m;
}

template <Scalar T>
double max_abs(const Matrix<T>& a) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::fabs(to_double(a(i, j))));
    return m;
}

template <Scalar T>
Vector<double> to_double_vector(const Vector<T>& v) {
    Vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
    return out;
}

// Max absolute column sum.
template <Scalar T>
double norm1(const Matrix<T>& a) {
    double best = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) s += std::fabs(to_double(a(i, j)));
        best = std::max(best, s);
    }
    return best;
}

// ---------------------------------------------------------------------------
// elimination

template <Scalar T>
struct EchelonForm {
    Matrix<T> reduced;
    std::vector<std::size_t> pivots;
};

namespace detail {

// Pivot choice: first nonzero in exact mode, largest magnitude otherwise.
template <Scalar T>
std::optional<std::size_t> choose_pivot(const Matrix<T>& a, std::size_t col, std::size_t from, double tol) {
    std::optional<std::size_t> best;
    double best_mag = tol;
    for (std::size_t i = from; i < a.rows(); ++i) {
        if constexpr (is_exact<T>()) {
            if (!is_zero(a(i, col))) return i;
        } else {
            double mag = std::fabs(a(i, col));
            if (mag > best_mag) {
                best_mag = mag;
                best = i;
            }
        }
    }
    return best;
}

template <Scalar T>
void swap_rows(Matrix<T>& a, std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

}  // namespace detail

// Reduced row echelon form. `tol` only matters for floating scalars.
template <Scalar T>
EchelonForm<T> rref(Matrix<T> a, double tol = 1e-12) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        auto p = detail::choose_pivot(a, c, r, tol);
        if (!p) continue;
        detail::swap_rows(a, r, *p);
        T inv = T(1) / a(r, c);
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || is_zero(a(i, c))) continue;
            T f = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

template <Scalar T>
std::size_t rank(const Matrix<T>& a, double tol = 1e-12) {
    return rref(a, tol).pivots.size();
}

// Basis of {x : a x = 0}, one vector per free column, with the free
// coordinate set to 1.
template <Scalar T>
std::vector<Vector<T>> nullspace(const Matrix<T>& a, double tol = 1e-12) {
    auto [r, pivots] = rref(a, tol);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vector<T>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector<T> v(a.cols(), T(0));
        v[free] = T(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <Scalar T>
T determinant(Matrix<T> a, double tol = 0.0) {
    if (!a.square()) throw DimensionMismatch("determinant of non-square matrix");
    T det(1);
    const std::size_t n = a.rows();
    for (std::size_t c = 0; c < n; ++c) {
        auto p = detail::choose_pivot(a, c, c, tol);
        if (!p) return T(0);
        if (*p != c) {
            detail::swap_rows(a, c, *p);
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (is_zero(a(i, c))) continue;
            T f = a(i, c) / a(c, c);
            for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return det;
}

// Gauss-Jordan inverse. Throws SingularMatrix.
template <Scalar T>
Matrix<T> inverse(const Matrix<T>& a, double tol = 1e-12) {
    if (!a.square()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = a.rows();
    Matrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = T(1);
    }
    auto [r, pivots] = rref(std::move(aug), tol);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
    Matrix<T> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

template <Scalar T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
    return a * b - b * a;
}

}  // namespace leibrack

#endif

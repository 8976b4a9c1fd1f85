#pragma once

#include "tlau/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace tlau {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over Q(i). Maps act on column vectors.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
    static Matrix column(const Vector& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector col(std::size_t c) const;
    Vector row(std::size_t r) const;
    Vector apply(const Vector& v) const;

    Matrix transpose() const;
    bool is_zero() const;
    bool is_identity() const;

    /// Copies `block` into this matrix with its top-left corner at (r, c).
    void set_block(std::size_t r, std::size_t c, const Matrix& block);
    Matrix block(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    Matrix& operator*=(const Scalar& s);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
    friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector scale(const Vector& v, const Scalar& s);
bool is_zero(const Vector& v);

/// Reduced row echelon form with pivot columns.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; pivots are only sought in the first `pivot_cols` columns.
Echelon row_reduce(Matrix m, std::size_t pivot_cols);
inline Echelon row_reduce(Matrix m)
{
    std::size_t c = m.cols();
    return row_reduce(std::move(m), c);
}

std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0}, one basis vector per column.
Matrix nullspace(const Matrix& m);

/// Pivot columns of `m`, a basis of its column space.
Matrix column_space(const Matrix& m);

/// Either a solution of m x = b or a witness y with y^T m = 0 and y^T b != 0.
struct SolveResult {
    std::optional<Vector> solution;
    std::optional<Vector> witness;
};
SolveResult solve(const Matrix& m, const Vector& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Conjugate transpose.
Matrix adjoint(const Matrix& m);

} // namespace tlau

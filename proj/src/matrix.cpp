#include "tlau/matrix.hpp"
#include "tlau/errors.hpp"

#include <utility>

namespace tlau {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ShapeMismatch("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows)
{
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) throw ShapeMismatch("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

Matrix Matrix::column(const Vector& v) { return from_columns({v}, v.size()); }

Vector Matrix::col(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::apply(const Vector& v) const
{
    if (v.size() != cols_) throw ShapeMismatch("matrix-vector shape mismatch");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const Scalar& a = (*this)(r, c);
            if (!a.is_zero() && !v[c].is_zero()) out[r].add_product(a, v[c]);
        }
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const
{
    if (rows_ != cols_) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if ((*this)(r, c) != Scalar(r == c ? 1 : 0)) return false;
    return true;
}

void Matrix::set_block(std::size_t r, std::size_t c, const Matrix& block)
{
    if (r + block.rows() > rows_ || c + block.cols() > cols_)
        throw ShapeMismatch("block does not fit");
    for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j) (*this)(r + i, c + j) = block(i, j);
}

Matrix Matrix::block(std::size_t r, std::size_t c, std::size_t rows, std::size_t cols) const
{
    if (r + rows > rows_ || c + cols > cols_) throw ShapeMismatch("block out of range");
    Matrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(r + i, c + j);
    return out;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix sum shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeMismatch("matrix difference shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(const Scalar& s)
{
    for (auto& x : data_) x *= s;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) out(i, j).add_product(x, y);
            }
        }
    return out;
}

Vector operator+(const Vector& a, const Vector& b)
{
    if (a.size() != b.size()) throw ShapeMismatch("vector sum shape mismatch");
    Vector out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
    return out;
}

Vector operator-(const Vector& a, const Vector& b)
{
    if (a.size() != b.size()) throw ShapeMismatch("vector difference shape mismatch");
    Vector out(a);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

Vector scale(const Vector& v, const Scalar& s)
{
    Vector out(v);
    for (auto& x : out) x *= s;
    return out;
}

bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Echelon row_reduce(Matrix m, std::size_t pivot_cols)
{
    std::vector<std::size_t> pivots;
    std::size_t rows = m.rows();
    std::size_t cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m(p, c).is_zero()) ++p;
        if (p == rows) continue;
        if (p != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = m(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!m(r, j).is_zero()) m(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            Scalar f = m(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix nullspace(const Matrix& m)
{
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, f);
        basis.push_back(std::move(v));
    }
    return Matrix::from_columns(basis, m.cols());
}

Matrix column_space(const Matrix& m)
{
    Echelon e = row_reduce(m);
    std::vector<Vector> basis;
    for (auto p : e.pivots) basis.push_back(m.col(p));
    return Matrix::from_columns(basis, m.rows());
}

SolveResult solve(const Matrix& m, const Vector& b)
{
    if (b.size() != m.rows()) throw ShapeMismatch("right-hand side length mismatch");
    std::size_t rows = m.rows();
    std::size_t cols = m.cols();
    // [m | b | I]; the identity block records the row transform.
    Matrix aug(rows, cols + 1 + rows);
    aug.set_block(0, 0, m);
    for (std::size_t i = 0; i < rows; ++i) {
        aug(i, cols) = b[i];
        aug(i, cols + 1 + i) = 1;
    }
    Echelon e = row_reduce(std::move(aug), cols);
    std::size_t r = e.pivots.size();
    for (std::size_t i = r; i < rows; ++i) {
        if (!e.reduced(i, cols).is_zero()) {
            Vector y(rows);
            for (std::size_t k = 0; k < rows; ++k) y[k] = e.reduced(i, cols + 1 + k);
            return {std::nullopt, std::move(y)};
        }
    }
    Vector x(cols);
    for (std::size_t k = 0; k < r; ++k) x[e.pivots[k]] = e.reduced(k, cols);
    return {std::move(x), std::nullopt};
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols()) return std::nullopt;
    std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, Matrix::identity(n));
    Echelon e = row_reduce(std::move(aug), n);
    if (e.pivots.size() != n) return std::nullopt;
    return e.reduced.block(0, n, n, n);
}

Matrix adjoint(const Matrix& m)
{
    Matrix t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c).conj();
    return t;
}

} // namespace tlau

#include "oracle.hpp"

namespace oracle {

using tlau::Matrix;

std::size_t rank(Rows rows)
{
    std::size_t r = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        Scalar inv = rows[r][c].inverse();
        for (std::size_t q = r + 1; q < rows.size(); ++q) {
            if (rows[q][c].is_zero()) continue;
            Scalar f = rows[q][c] * inv;
            for (std::size_t k = c; k < cols; ++k) rows[q][k] -= f * rows[r][k];
        }
        ++r;
    }
    return r;
}

namespace {

std::size_t power(std::size_t d, std::size_t n)
{
    std::size_t p = 1;
    for (std::size_t i = 0; i < n; ++i) p *= d;
    return p;
}

std::vector<std::size_t> digits(std::size_t index, std::size_t d, std::size_t n)
{
    std::vector<std::size_t> t(n);
    for (std::size_t k = n; k-- > 0;) {
        t[k] = index % d;
        index /= d;
    }
    return t;
}

std::size_t undigits(const std::vector<std::size_t>& t, std::size_t d)
{
    std::size_t i = 0;
    for (std::size_t x : t) i = i * d + x;
    return i;
}

// Basis cochain: f(t0) = e_y0 and f = 0 on every other basis tuple.
struct BasisCochain {
    std::size_t t0;
    std::size_t y0;
    std::size_t m;
    std::vector<Scalar> at(std::size_t tuple) const
    {
        std::vector<Scalar> v(m);
        if (tuple == t0) v[y0] = 1;
        return v;
    }
};

void axpy(std::vector<Scalar>& acc, const Scalar& s, const std::vector<Scalar>& v)
{
    if (s.is_zero()) return;
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += s * v[i];
}

std::vector<Scalar> act(const Matrix& m, const std::vector<Scalar>& v)
{
    std::vector<Scalar> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
    return out;
}

std::vector<Scalar> evaluate_delta(std::size_t n, const tlau::Bimodule& x, const BasisCochain& f,
                                   const std::vector<std::size_t>& s)
{
    const auto& a = x.algebra();
    std::size_t d = a.dim();
    std::vector<Scalar> out(x.dim());
    std::vector<std::size_t> tail(s.begin() + 1, s.end());
    axpy(out, 1, act(x.left(s[0]), f.at(undigits(tail, d))));
    for (std::size_t k = 0; k < n; ++k) {
        Scalar sign = (k % 2 == 0) ? -1 : 1; // (-1)^(k+1)
        for (std::size_t mid = 0; mid < d; ++mid) {
            const Scalar& c = a.coeff(s[k], s[k + 1], mid);
            if (c.is_zero()) continue;
            std::vector<std::size_t> merged;
            for (std::size_t q = 0; q < k; ++q) merged.push_back(s[q]);
            merged.push_back(mid);
            for (std::size_t q = k + 2; q <= n; ++q) merged.push_back(s[q]);
            axpy(out, sign * c, f.at(undigits(merged, d)));
        }
    }
    std::vector<std::size_t> head(s.begin(), s.end() - 1);
    Scalar last = (n % 2 == 0) ? -1 : 1; // (-1)^(n+1)
    axpy(out, last, act(x.right(s[n]), f.at(undigits(head, d))));
    return out;
}

Matrix hom_constraints(const tlau::LeftModule& src, const tlau::LeftModule& tgt)
{
    std::size_t ns = src.dim(), nt = tgt.dim(), d = src.algebra().dim();
    Matrix m(d * nt * ns, nt * ns);
    for (std::size_t r = 0; r < nt; ++r)
        for (std::size_t c = 0; c < ns; ++c) {
            Matrix h(nt, ns);
            h(r, c) = 1;
            for (std::size_t i = 0; i < d; ++i) {
                Matrix diff = h * src.left(i) - tgt.left(i) * h;
                for (std::size_t p = 0; p < nt; ++p)
                    for (std::size_t q = 0; q < ns; ++q) m((i * nt + p) * ns + q, r * ns + c) = diff(p, q);
            }
        }
    return m;
}

// Kernel basis by reduction to echelon form with free-variable back substitution.
std::vector<std::vector<Scalar>> kernel(const Matrix& m)
{
    Rows rows;
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
    std::size_t cols = m.cols();
    std::vector<std::size_t> pivot_of_row;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        Scalar inv = rows[r][c].inverse();
        for (auto& v : rows[r]) v *= inv;
        for (std::size_t q = 0; q < rows.size(); ++q) {
            if (q == r || rows[q][c].is_zero()) continue;
            Scalar f = rows[q][c];
            for (std::size_t k = 0; k < cols; ++k) rows[q][k] -= f * rows[r][k];
        }
        pivot_of_row.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_of_row) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(cols);
        v[free] = 1;
        for (std::size_t k = 0; k < pivot_of_row.size(); ++k) v[pivot_of_row[k]] = -rows[k][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix unflatten(const std::vector<Scalar>& v, std::size_t rows, std::size_t cols)
{
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
    return m;
}

std::vector<Scalar> flatten(const Matrix& m)
{
    std::vector<Scalar> v;
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
    return v;
}

bool in_span(const std::vector<Matrix>& spanning, const Matrix& target)
{
    Rows rows;
    for (const auto& s : spanning) rows.push_back(flatten(s));
    std::size_t base = rank(rows);
    rows.push_back(flatten(target));
    return rank(rows) == base;
}

} // namespace

Rows coboundary_rows(std::size_t n, const tlau::Bimodule& x)
{
    std::size_t d = x.algebra().dim(), m = x.dim();
    std::size_t src = power(d, n), tgt = power(d, n + 1);
    Rows rows(tgt * m, std::vector<Scalar>(src * m));
    for (std::size_t t = 0; t < src; ++t)
        for (std::size_t y = 0; y < m; ++y) {
            BasisCochain f{t, y, m};
            for (std::size_t s = 0; s < tgt; ++s) {
                auto value = evaluate_delta(n, x, f, digits(s, d, n + 1));
                for (std::size_t yy = 0; yy < m; ++yy) rows[s * m + yy][t * m + y] = value[yy];
            }
        }
    return rows;
}

Dims cohomology(std::size_t n, const tlau::Bimodule& x)
{
    Dims out;
    out.c = power(x.algebra().dim(), n) * x.dim();
    out.z = out.c - rank(coboundary_rows(n, x));
    out.b = n == 0 ? 0 : rank(coboundary_rows(n - 1, x));
    out.h = out.z - out.b;
    return out;
}

bool injective_lift_exists(const tlau::InjectiveProblem& p)
{
    const auto& k = p.diagram.target;
    std::vector<Matrix> images;
    for (const auto& v : kernel(hom_constraints(k, p.module)))
        images.push_back(unflatten(v, p.module.dim(), k.dim()) * p.diagram.s);
    return in_span(images, p.lambda);
}

bool projective_lift_exists(const tlau::ProjectiveProblem& p)
{
    const auto& k = p.diagram.source;
    std::vector<Matrix> images;
    for (const auto& v : kernel(hom_constraints(p.module, k)))
        images.push_back(p.diagram.s * unflatten(v, k.dim(), p.module.dim()));
    return in_span(images, p.lambda);
}

} // namespace oracle

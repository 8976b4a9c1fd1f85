#include "tlau/hochschild.hpp"
#include "tlau/errors.hpp"

namespace tlau {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp)
{
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (base != 0 && r > (std::size_t(1) << 40) / base) return std::size_t(1) << 41;
        r *= base;
    }
    return r;
}

std::vector<std::size_t> digits_of(std::size_t index, std::size_t base, std::size_t count)
{
    std::vector<std::size_t> digits(count);
    for (std::size_t k = count; k-- > 0;) {
        digits[k] = index % base;
        index /= base;
    }
    return digits;
}

std::size_t index_of(const std::vector<std::size_t>& digits, std::size_t base)
{
    std::size_t idx = 0;
    for (auto d : digits) idx = idx * base + d;
    return idx;
}

} // namespace

std::size_t cochain_space_dim(std::size_t degree, std::size_t algebra_dim, std::size_t module_dim)
{
    return ipow(algebra_dim, degree) * module_dim;
}

Matrix coboundary(std::size_t n, const Bimodule& x, std::size_t cap, CoboundaryConvention convention)
{
    const FiniteAlgebra& a = x.algebra();
    std::size_t d = a.dim(), dx = x.dim();
    std::size_t cols = cochain_space_dim(n, d, dx);
    std::size_t rows = cochain_space_dim(n + 1, d, dx);
    if (rows > cap || cols > cap)
        throw SizeCap("coboundary of degree " + std::to_string(n) + " would be " + std::to_string(rows) + "x" +
                      std::to_string(cols) + ", above the cap of " + std::to_string(cap));
    Matrix m(rows, cols);
    std::size_t tuples = ipow(d, n + 1);
    Scalar last_sign = (n % 2 == 0) ? Scalar(-1) : Scalar(1);
    if (convention.flip_final_sign) last_sign = -last_sign;

    for (std::size_t t = 0; t < tuples; ++t) {
        std::vector<std::size_t> idx = digits_of(t, d, n + 1);
        std::size_t row0 = t * dx;

        // a_1 . T(a_2, ..., a_{n+1})
        std::vector<std::size_t> tail(idx.begin() + 1, idx.end());
        std::size_t tail_col = index_of(tail, d) * dx;
        const Matrix& left = x.left(idx[0]);
        for (std::size_t y = 0; y < dx; ++y)
            for (std::size_t z = 0; z < dx; ++z)
                if (!left(z, y).is_zero()) m(row0 + z, tail_col + y) += left(z, y);

        // sum_k (-1)^k T(a_1, ..., a_k a_{k+1}, ..., a_{n+1})
        for (std::size_t k = 0; k < n; ++k) {
            Scalar sign = (k % 2 == 0) ? Scalar(-1) : Scalar(1);
            std::vector<std::size_t> merged;
            merged.reserve(n);
            merged.insert(merged.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k));
            merged.push_back(0);
            merged.insert(merged.end(), idx.begin() + static_cast<std::ptrdiff_t>(k + 2), idx.end());
            for (std::size_t p = 0; p < d; ++p) {
                const Scalar& c = a.coeff(idx[k], idx[k + 1], p);
                if (c.is_zero()) continue;
                merged[k] = p;
                std::size_t col0 = index_of(merged, d) * dx;
                Scalar v = sign * c;
                for (std::size_t y = 0; y < dx; ++y) m(row0 + y, col0 + y) += v;
            }
        }

        // (-1)^{n+1} T(a_1, ..., a_n) . a_{n+1}
        std::vector<std::size_t> head(idx.begin(), idx.end() - 1);
        std::size_t head_col = index_of(head, d) * dx;
        const Matrix& right = x.right(idx[n]);
        for (std::size_t y = 0; y < dx; ++y)
            for (std::size_t z = 0; z < dx; ++z)
                if (!right(z, y).is_zero()) m(row0 + z, head_col + y) += last_sign * right(z, y);
    }
    return m;
}

CohomologyReport cohomology(std::size_t n, const Bimodule& x, std::size_t cap)
{
    CohomologyReport r;
    r.n = n;
    std::size_t d = x.algebra().dim(), dx = x.dim();
    r.dim_c = cochain_space_dim(n, d, dx);
    Matrix dn = coboundary(n, x, cap);
    Matrix cocycles = nullspace(dn);
    r.dim_z = cocycles.cols();
    Matrix coboundaries(r.dim_c, 0);
    if (n > 0) coboundaries = column_space(coboundary(n - 1, x, cap));
    r.dim_b = coboundaries.cols();
    r.dim_h = r.dim_z - r.dim_b;

    Matrix stacked(r.dim_c, r.dim_b + r.dim_z);
    stacked.set_block(0, 0, coboundaries);
    stacked.set_block(0, r.dim_b, cocycles);
    Echelon e = row_reduce(stacked);
    for (auto p : e.pivots) {
        if (p < r.dim_b) continue;
        r.representatives.push_back(Cochain{n, d, dx, stacked.col(p)});
    }
    return r;
}

Matrix derivations(const Bimodule& x) { return nullspace(coboundary(1, x)); }

Matrix inner_derivations(const Bimodule& x) { return column_space(coboundary(0, x)); }

bool verify_complex(const Bimodule& x, std::size_t n_max, std::size_t cap, CoboundaryConvention convention)
{
    Matrix current = coboundary(0, x, cap, convention);
    for (std::size_t k = 0; k <= n_max; ++k) {
        Matrix next = coboundary(k + 1, x, cap, convention);
        Matrix composite = next * current;
        for (std::size_t r = 0; r < composite.rows(); ++r)
            for (std::size_t c = 0; c < composite.cols(); ++c)
                if (!composite(r, c).is_zero()) throw ComplexBroken(k, r, c);
        current = std::move(next);
    }
    return true;
}

LauCohomologyReport hn_lau_check(const LauProduct& l, const Bimodule& e, std::size_t n, std::size_t cap)
{
    if (!(e.algebra() == l.product)) throw ShapeMismatch("bimodule must live over the Lau product");
    std::size_t d = l.product.dim();
    std::size_t needed = cochain_space_dim(n + 1, d, e.dim());
    if (needed > cap)
        throw SizeCap("degree " + std::to_string(n) + " check needs " + std::to_string(needed) +
                      " cochain coordinates, above the cap of " + std::to_string(cap));

    LauCohomologyReport r;
    r.n = n;
    r.a_unital = l.a.is_unital();
    r.b_unital = l.b.is_unital();
    r.e_essential = is_essential(e).essential;
    r.hypotheses_hold = r.a_unital && r.b_unital && r.e_essential;

    r.lhs_dim = cohomology(n, dual_bimodule(e), cap).dim_h;
    FactorBimodules split = restrict_to_factors(e, l, BEmbedding::complement);
    r.rhs_a_dim = cohomology(n, dual_bimodule(split.over_a), cap).dim_h;
    r.rhs_b_dim = cohomology(n, dual_bimodule(split.over_b), cap).dim_h;
    r.equal = r.lhs_dim == r.rhs_a_dim + r.rhs_b_dim;

    FactorBimodules coordinate = restrict_to_factors(e, l, BEmbedding::coordinate);
    r.rhs_b_dim_coordinate = cohomology(n, dual_bimodule(coordinate.over_b), cap).dim_h;
    r.equal_coordinate = r.lhs_dim == r.rhs_a_dim + r.rhs_b_dim_coordinate;
    return r;
}

LauCohomologyReport hn_lau_check(const LauProduct& l, const Bimodule& e_over_a, LauVariant variant, std::size_t n,
                                 std::size_t cap)
{
    InducedBimodule induced = induce_lau_bimodule(e_over_a, l, variant);
    if (induced.finding) {
        LauCohomologyReport r;
        r.n = n;
        r.variant = variant;
        r.a_unital = l.a.is_unital();
        r.b_unital = l.b.is_unital();
        r.induce_finding = induced.finding;
        return r;
    }
    LauCohomologyReport r = hn_lau_check(l, induced.module, n, cap);
    r.variant = variant;
    return r;
}

AmenabilityProbe amenability_probe(const FiniteAlgebra& a, const std::vector<Bimodule>& modules)
{
    AmenabilityProbe p;
    for (const auto& e : modules) {
        if (!(e.algebra() == a)) throw ShapeMismatch("probe module over a different algebra");
        std::size_t h = cohomology(1, dual_bimodule(e)).dim_h;
        p.h1_dims.push_back(h);
        if (h != 0) p.all_zero = false;
    }
    return p;
}

} // namespace tlau

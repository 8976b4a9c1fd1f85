#include "tlau/multiplier.hpp"
#include "tlau/errors.hpp"

namespace tlau {

namespace {

Vector stack(const DoubleCentralizer& m)
{
    std::size_t d = m.left.rows();
    Vector v(2 * d * d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            v[r * d + c] = m.left(r, c);
            v[d * d + r * d + c] = m.right(r, c);
        }
    return v;
}

DoubleCentralizer unstack(const Vector& v, std::size_t d)
{
    DoubleCentralizer m{Matrix(d, d), Matrix(d, d)};
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            m.left(r, c) = v[r * d + c];
            m.right(r, c) = v[d * d + r * d + c];
        }
    return m;
}

// Homogeneous system for the three centralizer identities on basis pairs.
Matrix centralizer_constraints(const FiniteAlgebra& a)
{
    std::size_t d = a.dim();
    auto lidx = [d](std::size_t r, std::size_t c) { return r * d + c; };
    auto ridx = [d](std::size_t r, std::size_t c) { return d * d + r * d + c; };
    Matrix m(3 * d * d * d, 2 * d * d);
    std::size_t row = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                // L(e_i e_j) - L(e_i) e_j
                for (std::size_t p = 0; p < d; ++p) {
                    m(row, lidx(k, p)) += a.coeff(i, j, p);
                    m(row, lidx(p, i)) -= a.coeff(p, j, k);
                }
                ++row;
                // R(e_i e_j) - e_i R(e_j)
                for (std::size_t p = 0; p < d; ++p) {
                    m(row, ridx(k, p)) += a.coeff(i, j, p);
                    m(row, ridx(p, j)) -= a.coeff(i, p, k);
                }
                ++row;
                // e_i L(e_j) - R(e_i) e_j
                for (std::size_t p = 0; p < d; ++p) {
                    m(row, lidx(p, j)) += a.coeff(i, p, k);
                    m(row, ridx(p, i)) -= a.coeff(p, j, k);
                }
                ++row;
            }
    return m;
}

} // namespace

bool is_double_centralizer(const FiniteAlgebra& a, const DoubleCentralizer& m)
{
    std::size_t d = a.dim();
    if (m.left.rows() != d || m.left.cols() != d || m.right.rows() != d || m.right.cols() != d)
        throw ShapeMismatch("double centralizer maps must be dim(A) x dim(A)");
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector ei = a.basis_vector(i), ej = a.basis_vector(j);
            Vector eij = a.multiply(ei, ej);
            if (m.left.apply(eij) != a.multiply(m.left.apply(ei), ej)) return false;
            if (m.right.apply(eij) != a.multiply(ei, m.right.apply(ej))) return false;
            if (a.multiply(ei, m.left.apply(ej)) != a.multiply(m.right.apply(ei), ej)) return false;
        }
    return true;
}

MultiplierAlgebra multiplier_algebra(const FiniteAlgebra& a)
{
    std::size_t d = a.dim();
    Matrix kernel = nullspace(centralizer_constraints(a));
    std::size_t m = kernel.cols();
    std::vector<DoubleCentralizer> basis;
    for (std::size_t s = 0; s < m; ++s) basis.push_back(unstack(kernel.col(s), d));

    Tensor3 c(m, m, m);
    for (std::size_t s = 0; s < m; ++s)
        for (std::size_t t = 0; t < m; ++t) {
            DoubleCentralizer prod{basis[s].left * basis[t].left, basis[t].right * basis[s].right};
            auto coords = solve(kernel, stack(prod)).solution;
            if (!coords) throw Error("multiplier product left the multiplier space");
            for (std::size_t u = 0; u < m; ++u) c(s, t, u) = (*coords)[u];
        }
    FiniteAlgebra structure = FiniteAlgebra::assemble(m, std::move(c));
    return MultiplierAlgebra{a, std::move(basis), std::move(structure), std::move(kernel)};
}

std::optional<Vector> multiplier_coordinates(const MultiplierAlgebra& ma, const DoubleCentralizer& m)
{
    return solve(ma.embedding, stack(m)).solution;
}

RegularEmbedding regular_embedding(const MultiplierAlgebra& ma)
{
    const FiniteAlgebra& a = ma.base;
    std::size_t d = a.dim(), m = ma.structure.dim();
    RegularEmbedding r;
    r.matrix = Matrix(m, d);
    for (std::size_t i = 0; i < d; ++i) {
        Vector ei = a.basis_vector(i);
        auto coords = multiplier_coordinates(ma, {a.left_mult(ei), a.right_mult(ei)});
        if (!coords) throw Error("regular multiplier outside the multiplier algebra");
        for (std::size_t s = 0; s < m; ++s) r.matrix(s, i) = (*coords)[s];
    }
    r.homomorphism = check_homomorphism(a, ma.structure, r.matrix).ok;
    std::size_t rk = rank(r.matrix);
    r.injective = rk == d;
    r.surjective = rk == m;
    return r;
}

MultiplierSplitReport multiplier_split_check(const AlgebraHom& t)
{
    LauProduct l = lau_product(t);
    std::size_t da = l.dim_a(), db = l.dim_b(), d = da + db;
    MultiplierAlgebra ma = multiplier_algebra(l.a);
    MultiplierAlgebra mb = multiplier_algebra(l.b);
    MultiplierAlgebra mp = multiplier_algebra(l.product);

    MultiplierSplitReport r;
    r.dim_m_a = ma.structure.dim();
    r.dim_m_b = mb.structure.dim();
    r.dim_m_product = mp.structure.dim();
    r.dim_factor_side = r.dim_m_a + r.dim_m_b;
    r.dims_equal = r.dim_m_product == r.dim_factor_side;
    r.a_unital = l.a.is_unital();
    r.b_unital = l.b.is_unital();
    r.hypotheses_hold = r.a_unital && r.b_unital;
    r.candidate = "conjugation of blockwise multipliers by (a,b) -> (a + T(b), b) (interpretation)";

    Matrix phi = Matrix::identity(d), phi_inv = Matrix::identity(d);
    phi.set_block(0, da, t.matrix());
    phi_inv.set_block(0, da, t.matrix() * Scalar(-1));

    FiniteAlgebra factor_side = direct_product(ma.structure, mb.structure);
    Matrix psi(r.dim_m_product, r.dim_factor_side);
    for (std::size_t s = 0; s < r.dim_factor_side; ++s) {
        bool on_a = s < r.dim_m_a;
        const DoubleCentralizer& src = on_a ? ma.basis[s] : mb.basis[s - r.dim_m_a];
        Matrix left(d, d), right(d, d);
        left.set_block(on_a ? 0 : da, on_a ? 0 : da, src.left);
        right.set_block(on_a ? 0 : da, on_a ? 0 : da, src.right);
        DoubleCentralizer image{phi_inv * left * phi, phi_inv * right * phi};
        auto coords = multiplier_coordinates(mp, image);
        if (!coords) return r;
        for (std::size_t u = 0; u < r.dim_m_product; ++u) psi(u, s) = (*coords)[u];
    }
    bool hom = check_homomorphism(factor_side, mp.structure, psi).ok;
    bool bijective = r.dims_equal && rank(psi) == r.dim_m_product;
    bool unital = factor_side.unit() && mp.structure.unit() && psi.apply(*factor_side.unit()) == *mp.structure.unit();
    r.iso_found = hom && bijective && unital;
    return r;
}

} // namespace tlau

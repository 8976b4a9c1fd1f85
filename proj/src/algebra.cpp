#include "tlau/algebra.hpp"
#include "tlau/errors.hpp"

#include <algorithm>

namespace tlau {

AssociativityViolation::AssociativityViolation(std::array<std::size_t, 4> w)
    : Error("associativity fails at (e" + std::to_string(w[0]) + " e" + std::to_string(w[1]) + ") e" +
            std::to_string(w[2]) + ", coordinate " + std::to_string(w[3])),
      witness(w)
{
}

HomomorphismViolation::HomomorphismViolation(std::size_t i_, std::size_t j_)
    : Error("T(b" + std::to_string(i_) + " b" + std::to_string(j_) + ") != T(b" + std::to_string(i_) + ") T(b" +
            std::to_string(j_) + ")"),
      i(i_), j(j_)
{
}

ComplexBroken::ComplexBroken(std::size_t k, std::size_t r, std::size_t c)
    : Error("coboundary composite nonzero at degree " + std::to_string(k) + ", entry (" + std::to_string(r) + ", " +
            std::to_string(c) + ")"),
      degree(k), row(r), col(c)
{
}

std::optional<std::array<std::size_t, 4>> find_associativity_violation(std::size_t d, const Tensor3& c)
{
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) {
                    Scalar lhs, rhs;
                    for (std::size_t m = 0; m < d; ++m) {
                        if (!c(i, j, m).is_zero() && !c(m, k, l).is_zero()) lhs.add_product(c(i, j, m), c(m, k, l));
                        if (!c(j, k, m).is_zero() && !c(i, m, l).is_zero()) rhs.add_product(c(j, k, m), c(i, m, l));
                    }
                    if (lhs != rhs) return std::array<std::size_t, 4>{i, j, k, l};
                }
    return std::nullopt;
}

FiniteAlgebra FiniteAlgebra::assemble(std::size_t dim, Tensor3 structure, std::vector<std::string> labels)
{
    for (int axis = 0; axis < 3; ++axis)
        if (structure.extent(axis) != dim)
            throw ShapeMismatch("structure tensor must be " + std::to_string(dim) + "^3");
    if (!labels.empty() && labels.size() != dim) throw ShapeMismatch("label count differs from dimension");
    if (auto w = find_associativity_violation(dim, structure)) throw AssociativityViolation(*w);
    FiniteAlgebra a;
    a.dim_ = dim;
    a.structure_ = std::move(structure);
    a.labels_ = std::move(labels);
    a.unit_ = find_unit(a);
    return a;
}

Vector FiniteAlgebra::basis_vector(std::size_t i) const
{
    Vector v(dim_);
    v.at(i) = 1;
    return v;
}

Vector FiniteAlgebra::multiply(const Vector& x, const Vector& y) const
{
    if (x.size() != dim_ || y.size() != dim_) throw ShapeMismatch("algebra element of wrong length");
    Vector out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero()) continue;
            Scalar xy = x[i] * y[j];
            for (std::size_t k = 0; k < dim_; ++k)
                if (!structure_(i, j, k).is_zero()) out[k].add_product(xy, structure_(i, j, k));
        }
    }
    return out;
}

Matrix FiniteAlgebra::left_mult(const Vector& a) const
{
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Vector col = multiply(a, basis_vector(j));
        for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
    }
    return m;
}

Matrix FiniteAlgebra::right_mult(const Vector& a) const
{
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Vector col = multiply(basis_vector(j), a);
        for (std::size_t k = 0; k < dim_; ++k) m(k, j) = col[k];
    }
    return m;
}

std::optional<Vector> find_unit(const FiniteAlgebra& a)
{
    std::size_t d = a.dim();
    // Rows: left equations u e_j = e_j, then right equations e_j u = e_j.
    Matrix m(2 * d * d, d);
    Vector rhs(2 * d * d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            std::size_t left = j * d + k;
            std::size_t right = d * d + left;
            for (std::size_t i = 0; i < d; ++i) {
                m(left, i) = a.coeff(i, j, k);
                m(right, i) = a.coeff(j, i, k);
            }
            if (j == k) rhs[left] = rhs[right] = 1;
        }
    return solve(m, rhs).solution;
}

FiniteAlgebra opposite(const FiniteAlgebra& a)
{
    std::size_t d = a.dim();
    Tensor3 c(d, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) c(i, j, k) = a.coeff(j, i, k);
    return FiniteAlgebra::assemble(d, std::move(c), a.labels());
}

FiniteAlgebra change_basis(const FiniteAlgebra& a, const Matrix& p)
{
    std::size_t d = a.dim();
    if (p.rows() != d || p.cols() != d) throw ShapeMismatch("basis change must be square of algebra dimension");
    auto pinv = inverse(p);
    if (!pinv) throw Error("basis change matrix is singular");
    Tensor3 c(d, d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Vector prod = a.multiply(p.col(i), p.col(j));
            Vector coords = pinv->apply(prod);
            for (std::size_t k = 0; k < d; ++k) c(i, j, k) = coords[k];
        }
    return FiniteAlgebra::assemble(d, std::move(c));
}

FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b)
{
    std::size_t da = a.dim(), db = b.dim(), d = da + db;
    Tensor3 c(d, d, d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < da; ++k) c(i, j, k) = a.coeff(i, j, k);
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j)
            for (std::size_t k = 0; k < db; ++k) c(da + i, da + j, da + k) = b.coeff(i, j, k);
    std::vector<std::string> labels;
    if (!a.labels().empty() && !b.labels().empty()) {
        for (const auto& s : a.labels()) labels.push_back("(" + s + ",0)");
        for (const auto& s : b.labels()) labels.push_back("(0," + s + ")");
    }
    return FiniteAlgebra::assemble(d, std::move(c), std::move(labels));
}

HomCheck check_homomorphism(const FiniteAlgebra& source, const FiniteAlgebra& target, const Matrix& t)
{
    if (t.rows() != target.dim() || t.cols() != source.dim())
        throw ShapeMismatch("homomorphism matrix must be dim(target) x dim(source)");
    for (std::size_t i = 0; i < source.dim(); ++i)
        for (std::size_t j = 0; j < source.dim(); ++j) {
            Vector lhs = t.apply(source.multiply(source.basis_vector(i), source.basis_vector(j)));
            Vector rhs = target.multiply(t.col(i), t.col(j));
            if (lhs != rhs) return {false, std::make_pair(i, j)};
        }
    return {};
}

AlgebraHom::AlgebraHom(FiniteAlgebra source, FiniteAlgebra target, Matrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix))
{
    HomCheck check = check_homomorphism(source_, target_, matrix_);
    if (!check.ok) throw HomomorphismViolation(check.witness->first, check.witness->second);
}

HomCheck check_homomorphism(const AlgebraHom& t)
{
    return check_homomorphism(t.source(), t.target(), t.matrix());
}

LauProduct lau_product(const AlgebraHom& t)
{
    const FiniteAlgebra& a = t.target();
    const FiniteAlgebra& b = t.source();
    std::size_t da = a.dim(), db = b.dim(), d = da + db;
    const Matrix& m = t.matrix();
    Tensor3 c(d, d, d);
    // (e_i,0)(e_j,0) = (e_i e_j, 0)
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j)
            for (std::size_t k = 0; k < da; ++k) c(i, j, k) = a.coeff(i, j, k);
    for (std::size_t q = 0; q < db; ++q) {
        Vector tq = m.col(q);
        for (std::size_t i = 0; i < da; ++i) {
            // (e_i,0)(0,b_q) = (e_i T(b_q), 0) and (0,b_q)(e_i,0) = (T(b_q) e_i, 0)
            Vector right = a.multiply(a.basis_vector(i), tq);
            Vector left = a.multiply(tq, a.basis_vector(i));
            for (std::size_t k = 0; k < da; ++k) {
                c(i, da + q, k) = right[k];
                c(da + q, i, k) = left[k];
            }
        }
    }
    // (0,b_p)(0,b_q) = (0, b_p b_q)
    for (std::size_t p = 0; p < db; ++p)
        for (std::size_t q = 0; q < db; ++q)
            for (std::size_t k = 0; k < db; ++k) c(da + p, da + q, da + k) = b.coeff(p, q, k);

    std::vector<std::string> labels;
    if (!a.labels().empty() && !b.labels().empty()) {
        for (const auto& s : a.labels()) labels.push_back("(" + s + ",0)");
        for (const auto& s : b.labels()) labels.push_back("(0," + s + ")");
    }
    return LauProduct{FiniteAlgebra::assemble(d, std::move(c), std::move(labels)), a, b, t};
}

mpq_class operator_norm_l1(const Matrix& m)
{
    mpq_class best = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        mpq_class sum = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) sum += m(r, c).modulus_bound();
        best = std::max(best, sum);
    }
    return best;
}

mpq_class submultiplicativity_constant(const FiniteAlgebra& a)
{
    mpq_class best = 0;
    std::size_t d = a.dim();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            mpq_class sum = 0;
            for (std::size_t k = 0; k < d; ++k) sum += a.coeff(i, j, k).modulus_bound();
            best = std::max(best, sum);
        }
    return best;
}

NormData rescale_norms(const AlgebraHom& t)
{
    NormData n;
    n.t_norm = operator_norm_l1(t.matrix());
    n.rescale_factor = std::max(mpq_class(1), n.t_norm);
    n.norm_warning = n.t_norm > 1;
    n.submultiplicativity_constant = submultiplicativity_constant(lau_product(t).product);
    return n;
}

CanonicalMaps canonical_maps(const LauProduct& l)
{
    std::size_t da = l.dim_a(), db = l.dim_b(), d = da + db;
    const Matrix& t = l.hom.matrix();
    CanonicalMaps m{Matrix(da, d), Matrix(db, d), Matrix(d, da), Matrix(d, db), Matrix(d, db), Matrix(da, d)};
    m.p_a.set_block(0, 0, Matrix::identity(da));
    m.p_b.set_block(0, da, Matrix::identity(db));
    m.q_a.set_block(0, 0, Matrix::identity(da));
    m.q_b.set_block(da, 0, Matrix::identity(db));
    m.eta_b.set_block(0, 0, t * Scalar(-1));
    m.eta_b.set_block(da, 0, Matrix::identity(db));
    m.theta_a.set_block(0, 0, Matrix::identity(da));
    m.theta_a.set_block(0, da, t);
    return m;
}

} // namespace tlau

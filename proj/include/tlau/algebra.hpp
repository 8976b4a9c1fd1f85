#pragma once

#include "tlau/matrix.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tlau {

/// Flat d0 x d1 x d2 tensor of scalars.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(std::size_t d0, std::size_t d1, std::size_t d2)
        : d0_(d0), d1_(d1), d2_(d2), data_(d0 * d1 * d2) {}

    std::size_t extent(int axis) const { return axis == 0 ? d0_ : axis == 1 ? d1_ : d2_; }
    Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) { return data_[(i * d1_ + j) * d2_ + k]; }
    const Scalar& operator()(std::size_t i, std::size_t j, std::size_t k) const
    {
        return data_[(i * d1_ + j) * d2_ + k];
    }
    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    std::size_t d0_ = 0, d1_ = 0, d2_ = 0;
    std::vector<Scalar> data_;
};

/// Finite-dimensional associative algebra given by structure constants:
/// e_i e_j = sum_k c(i, j, k) e_k. Instances are always associative.
class FiniteAlgebra {
public:
    /// Validates shape and associativity; detects the unit.
    /// Throws ShapeMismatch or AssociativityViolation.
    static FiniteAlgebra assemble(std::size_t dim, Tensor3 structure,
                                  std::vector<std::string> labels = {});

    std::size_t dim() const { return dim_; }
    const Tensor3& structure() const { return structure_; }
    const Scalar& coeff(std::size_t i, std::size_t j, std::size_t k) const { return structure_(i, j, k); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::optional<Vector>& unit() const { return unit_; }
    bool is_unital() const { return unit_.has_value(); }

    Vector basis_vector(std::size_t i) const;
    Vector multiply(const Vector& x, const Vector& y) const;
    /// Matrix of x -> a x.
    Matrix left_mult(const Vector& a) const;
    /// Matrix of x -> x a.
    Matrix right_mult(const Vector& a) const;

    friend bool operator==(const FiniteAlgebra& a, const FiniteAlgebra& b)
    {
        return a.dim_ == b.dim_ && a.structure_ == b.structure_;
    }

private:
    FiniteAlgebra() = default;
    std::size_t dim_ = 0;
    Tensor3 structure_;
    std::vector<std::string> labels_;
    std::optional<Vector> unit_;
};

/// First (i, j, k, l) with (e_i e_j) e_k != e_i (e_j e_k) at coordinate l.
std::optional<std::array<std::size_t, 4>> find_associativity_violation(std::size_t dim, const Tensor3& c);

std::optional<Vector> find_unit(const FiniteAlgebra& a);

FiniteAlgebra opposite(const FiniteAlgebra& a);

/// Structure constants in the basis f_i = sum_k p(k, i) e_k.
FiniteAlgebra change_basis(const FiniteAlgebra& a, const Matrix& p);

/// Blockwise product algebra A x B (basis of A, then basis of B).
FiniteAlgebra direct_product(const FiniteAlgebra& a, const FiniteAlgebra& b);

struct HomCheck {
    bool ok = true;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// Multiplicativity of `matrix` (target dim x source dim) on all basis pairs.
/// Throws ShapeMismatch.
HomCheck check_homomorphism(const FiniteAlgebra& source, const FiniteAlgebra& target, const Matrix& matrix);

/// Algebra homomorphism source -> target, validated on construction.
class AlgebraHom {
public:
    /// Throws ShapeMismatch or HomomorphismViolation.
    AlgebraHom(FiniteAlgebra source, FiniteAlgebra target, Matrix matrix);

    const FiniteAlgebra& source() const { return source_; }
    const FiniteAlgebra& target() const { return target_; }
    const Matrix& matrix() const { return matrix_; }

private:
    FiniteAlgebra source_;
    FiniteAlgebra target_;
    Matrix matrix_;
};

HomCheck check_homomorphism(const AlgebraHom& t);

/// A x_T B: (a,b)(c,d) = (ac + T(b)c + aT(d), bd), basis of A then basis of B.
struct LauProduct {
    FiniteAlgebra product;
    FiniteAlgebra a;
    FiniteAlgebra b;
    AlgebraHom hom;

    std::size_t dim_a() const { return a.dim(); }
    std::size_t dim_b() const { return b.dim(); }
};

LauProduct lau_product(const AlgebraHom& t);

mpq_class operator_norm_l1(const Matrix& m);

/// Largest l1 mass of a basis product, using modulus bounds.
mpq_class submultiplicativity_constant(const FiniteAlgebra& a);

struct NormData {
    mpq_class submultiplicativity_constant;
    mpq_class t_norm;
    mpq_class rescale_factor;
    /// Set when the hom has norm above one; reported, never fatal.
    bool norm_warning = false;
};

/// Norm diagnostics for A x_T B; the constant refers to the product algebra.
NormData rescale_norms(const AlgebraHom& t);

struct CanonicalMaps {
    Matrix p_a;     // (a,b) -> a, linear only
    Matrix p_b;     // (a,b) -> b
    Matrix q_a;     // a -> (a,0)
    Matrix q_b;     // b -> (0,b)
    Matrix eta_b;   // b -> (-T(b), b)
    Matrix theta_a; // (a,b) -> a + T(b)
};

CanonicalMaps canonical_maps(const LauProduct& l);

} // namespace tlau

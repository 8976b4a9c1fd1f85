#pragma once

#include "tlau/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tlau {

/// Action matrices act on column vectors: a_i . v = left(i) v, v . a_i = right(i) v.
class Bimodule {
public:
    /// Throws ShapeMismatch or AxiomViolation.
    static Bimodule make(FiniteAlgebra algebra, std::size_t dim, std::vector<Matrix> left, std::vector<Matrix> right);
    /// No axiom check; used where a failure is a finding rather than an error.
    static Bimodule unchecked(FiniteAlgebra algebra, std::size_t dim, std::vector<Matrix> left,
                              std::vector<Matrix> right);
    /// left(i, x, y): coefficient of e_y in a_i . e_x; right(x, i, y): of e_y in e_x . a_i.
    static Bimodule from_tensors(FiniteAlgebra algebra, std::size_t dim, const Tensor3& left, const Tensor3& right);

    const FiniteAlgebra& algebra() const { return algebra_; }
    std::size_t dim() const { return dim_; }
    const Matrix& left(std::size_t i) const { return left_.at(i); }
    const Matrix& right(std::size_t i) const { return right_.at(i); }
    const std::vector<Matrix>& left_actions() const { return left_; }
    const std::vector<Matrix>& right_actions() const { return right_; }
    Matrix left_action(const Vector& a) const;
    Matrix right_action(const Vector& a) const;

    Tensor3 left_tensor() const;
    Tensor3 right_tensor() const;

private:
    Bimodule(FiniteAlgebra algebra, std::size_t dim, std::vector<Matrix> left, std::vector<Matrix> right)
        : algebra_(std::move(algebra)), dim_(dim), left_(std::move(left)), right_(std::move(right)) {}

    FiniteAlgebra algebra_;
    std::size_t dim_;
    std::vector<Matrix> left_;
    std::vector<Matrix> right_;
};

/// Description of the first failing bimodule identity, if any.
std::optional<std::string> find_bimodule_violation(const FiniteAlgebra& a, std::size_t dim,
                                                   const std::vector<Matrix>& left,
                                                   const std::vector<Matrix>& right);

class LeftModule {
public:
    /// Throws ShapeMismatch or AxiomViolation.
    static LeftModule make(FiniteAlgebra algebra, std::size_t dim, std::vector<Matrix> left);
    static LeftModule unchecked(FiniteAlgebra algebra, std::size_t dim, std::vector<Matrix> left);

    const FiniteAlgebra& algebra() const { return algebra_; }
    std::size_t dim() const { return dim_; }
    const Matrix& left(std::size_t i) const { return left_.at(i); }
    const std::vector<Matrix>& left_actions() const { return left_; }
    Matrix left_action(const Vector& a) const;

private:
    LeftModule(FiniteAlgebra algebra, std::size_t dim, std::vector<Matrix> left)
        : algebra_(std::move(algebra)), dim_(dim), left_(std::move(left)) {}

    FiniteAlgebra algebra_;
    std::size_t dim_;
    std::vector<Matrix> left_;
};

std::optional<std::string> find_left_module_violation(const FiniteAlgebra& a, std::size_t dim,
                                                      const std::vector<Matrix>& left);

/// m (target dim x source dim) commutes with every basis action.
bool intertwines(const LeftModule& source, const LeftModule& target, const Matrix& m);
bool intertwines(const Bimodule& source, const Bimodule& target, const Matrix& m);

/// Morphism of left modules over the same algebra, checked on construction.
class ModuleMap {
public:
    /// Throws ShapeMismatch or AxiomViolation.
    ModuleMap(LeftModule source, LeftModule target, Matrix matrix);

    const LeftModule& source() const { return source_; }
    const LeftModule& target() const { return target_; }
    const Matrix& matrix() const { return matrix_; }

private:
    LeftModule source_;
    LeftModule target_;
    Matrix matrix_;
};

Bimodule regular_bimodule(const FiniteAlgebra& a);
LeftModule regular_left_module(const FiniteAlgebra& a);
Bimodule zero_bimodule(const FiniteAlgebra& a, std::size_t dim);

/// Blockwise sum of two bimodules over the same algebra.
Bimodule direct_sum(const Bimodule& x, const Bimodule& y);

/// Actions in the basis given by the columns of q: q^{-1} L q.
Bimodule change_module_basis(const Bimodule& e, const Matrix& q);
LeftModule change_module_basis(const LeftModule& m, const Matrix& q);

/// E* with (f.a)(x) = f(a.x) and (a.f)(x) = f(x.a), on the dual basis.
Bimodule dual_bimodule(const Bimodule& e);

/// The dual of a left C-module is a right C-module, returned as a left module over C^op.
LeftModule dual_left_module(const LeftModule& m);

/// B-bimodule with b.x = T(b).x and x.b = x.T(b); `e` lives over T's target.
Bimodule induce_via_T(const Bimodule& e, const AlgebraHom& t);

enum class LauVariant { standard, as_printed };

std::string to_string(LauVariant v);
LauVariant parse_variant(const std::string& text);

struct InducedBimodule {
    Bimodule module;
    /// Set when the induced actions fail a bimodule identity.
    std::optional<std::string> finding;
};

/// A-bimodule E made into an (A x_T B)-bimodule:
///   standard:   (a,b).x = a.x + T(b).x
///   as_printed: (a,b).x = T(b).x
InducedBimodule induce_lau_bimodule(const Bimodule& e, const LauProduct& l, LauVariant variant);

/// How B is embedded in A x_T B when restricting: b -> (0,b), or b -> (-T(b), b).
enum class BEmbedding { coordinate, complement };

struct FactorBimodules {
    Bimodule over_a;
    Bimodule over_b;
};

/// A acts through a -> (a,0); B through the chosen embedding.
FactorBimodules restrict_to_factors(const Bimodule& e, const LauProduct& l,
                                    BEmbedding embedding = BEmbedding::coordinate);

enum class Side { a, b };

/// C-module on A x_T B induced from a C-module structure on A (or B):
///   A: c.(a,b) = (c.a + c.T(b), 0)
///   B: c.(a,b) = (-T(c.b), c.b)
/// Throws AxiomViolation if the induced action is not a module.
LeftModule sec2_left_actions(Side side, const LauProduct& l, const LeftModule& factor);

struct FactorLeftModules {
    LeftModule a;
    LeftModule b;
    std::optional<std::string> a_violation;
    std::optional<std::string> b_violation;
};

/// c.a = p_A(c.(a,0)) and c.b = P_B(c.(0,b)).
FactorLeftModules restrict_left_module(const LeftModule& m, const LauProduct& l);

/// Sum of the two induced actions; transports the direct sum along (a,b) -> (a + T(b), b).
LeftModule combined_lau_module(const LauProduct& l, const LeftModule& on_a, const LeftModule& on_b);

/// c.(x,y) = (c.x, c.y) in coordinates.
LeftModule blockwise_module(const LeftModule& first, const LeftModule& second);

struct DualSplit {
    Matrix q_a_star; // a* -> (a*, 0)
    Matrix q_b_star; // b* -> (0, b*)
    Matrix iso;      // (A x_T B)* -> A* x B* in dual coordinates
};

DualSplit dual_product_split(const LauProduct& l);

struct Essentiality {
    std::size_t dim = 0;
    std::size_t left_span_rank = 0;
    std::size_t right_span_rank = 0;
    bool left = false;
    bool right = false;
    bool essential = false;
};

/// Finite-dimensional reading of density: span(A.X) = X and span(X.A) = X.
Essentiality is_essential(const Bimodule& e);

} // namespace tlau

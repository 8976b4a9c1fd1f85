#pragma once

#include "tlau/algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tlau {

/// Pair (L, R) with L(ab) = L(a)b, R(ab) = aR(b), aL(b) = R(a)b.
struct DoubleCentralizer {
    Matrix left;
    Matrix right;
};

bool is_double_centralizer(const FiniteAlgebra& a, const DoubleCentralizer& m);

/// M(A) with product (L1,R1)(L2,R2) = (L1 L2, R2 R1).
struct MultiplierAlgebra {
    FiniteAlgebra base;
    std::vector<DoubleCentralizer> basis;
    FiniteAlgebra structure;
    /// Columns are the stacked (vec L, vec R) of the basis elements.
    Matrix embedding;
};

MultiplierAlgebra multiplier_algebra(const FiniteAlgebra& a);

/// Coordinates of `m` in the multiplier basis, if it is a double centralizer.
std::optional<Vector> multiplier_coordinates(const MultiplierAlgebra& ma, const DoubleCentralizer& m);

struct RegularEmbedding {
    Matrix matrix; // dim M(A) x dim A
    bool homomorphism = false;
    bool injective = false;
    bool surjective = false;
    bool bijective() const { return injective && surjective; }
};

/// a -> (L_a, R_a).
RegularEmbedding regular_embedding(const MultiplierAlgebra& ma);

struct MultiplierSplitReport {
    std::size_t dim_m_a = 0;
    std::size_t dim_m_b = 0;
    std::size_t dim_m_product = 0;
    std::size_t dim_factor_side = 0;
    bool dims_equal = false;
    /// Candidate map lands in M(A x_T B), is multiplicative, unital and bijective.
    bool iso_found = false;
    bool a_unital = false;
    bool b_unital = false;
    bool hypotheses_hold = false;
    std::string candidate;
};

/// Compares M(A x_T B) with M(A) x M(B) through the candidate
/// ((L_A,R_A),(L_B,R_B)) -> conjugation of L_A (+) L_B, R_A (+) R_B by (a,b) -> (a + T(b), b).
MultiplierSplitReport multiplier_split_check(const AlgebraHom& t);

} // namespace tlau

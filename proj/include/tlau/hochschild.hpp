#pragma once

#include "tlau/bimodule.hpp"

#include <optional>
#include <vector>

namespace tlau {

inline constexpr std::size_t default_size_cap = 4096;

/// n-linear map A^n -> X stored as coefficients indexed by
/// ((i_1 * d + i_2) * d + ... + i_n) * dim X + y.
struct Cochain {
    std::size_t degree = 0;
    std::size_t algebra_dim = 0;
    std::size_t module_dim = 0;
    Vector coeffs;
};

std::size_t cochain_space_dim(std::size_t degree, std::size_t algebra_dim, std::size_t module_dim);

/// Variant switches used by test fixtures only.
struct CoboundaryConvention {
    /// Subtract the final T(a_1..a_n).a_{n+1} term instead of adding (-1)^{n+1} times it.
    bool flip_final_sign = false;
};

/// Matrix of delta^n : C^n(A,X) -> C^{n+1}(A,X). Throws SizeCap when either side exceeds `cap`.
Matrix coboundary(std::size_t n, const Bimodule& x, std::size_t cap = default_size_cap,
                  CoboundaryConvention convention = {});

struct CohomologyReport {
    std::size_t n = 0;
    std::size_t dim_c = 0;
    std::size_t dim_z = 0;
    std::size_t dim_b = 0;
    std::size_t dim_h = 0;
    /// Cocycles spanning a complement of the coboundaries.
    std::vector<Cochain> representatives;
};

CohomologyReport cohomology(std::size_t n, const Bimodule& x, std::size_t cap = default_size_cap);

/// Basis of Z^1 (columns).
Matrix derivations(const Bimodule& x);
/// Basis of B^1 (columns).
Matrix inner_derivations(const Bimodule& x);

/// Checks delta^{k+1} delta^k = 0 for k <= n_max; throws ComplexBroken with the first failure.
bool verify_complex(const Bimodule& x, std::size_t n_max, std::size_t cap = default_size_cap,
                    CoboundaryConvention convention = {});

struct LauCohomologyReport {
    std::size_t n = 1;
    std::optional<LauVariant> variant;
    bool a_unital = false;
    bool b_unital = false;
    bool e_essential = false;
    /// The check is asserted only when all hypotheses hold; otherwise informative.
    bool hypotheses_hold = false;
    std::size_t lhs_dim = 0;
    std::size_t rhs_a_dim = 0;
    /// B acting through b -> (-T(b), b).
    std::size_t rhs_b_dim = 0;
    bool equal = false;
    /// B acting through b -> (0, b), reported alongside.
    std::size_t rhs_b_dim_coordinate = 0;
    bool equal_coordinate = false;
    std::optional<std::string> induce_finding;
};

/// dim H^n(A x_T B, E*) against dim H^n(A, E*) + dim H^n(B, E*) for an (A x_T B)-bimodule E.
LauCohomologyReport hn_lau_check(const LauProduct& l, const Bimodule& e, std::size_t n,
                                 std::size_t cap = default_size_cap);

/// Same, with E induced from an A-bimodule by the chosen variant.
LauCohomologyReport hn_lau_check(const LauProduct& l, const Bimodule& e_over_a, LauVariant variant,
                                 std::size_t n, std::size_t cap = default_size_cap);

inline LauCohomologyReport h1_lau_check(const LauProduct& l, const Bimodule& e, std::size_t cap = default_size_cap)
{
    return hn_lau_check(l, e, 1, cap);
}

struct AmenabilityProbe {
    std::vector<std::size_t> h1_dims;
    bool all_zero = true;
};

/// dim H^1(A, E*) for each supplied E. A probe, not a decision procedure.
AmenabilityProbe amenability_probe(const FiniteAlgebra& a, const std::vector<Bimodule>& modules);

} // namespace tlau

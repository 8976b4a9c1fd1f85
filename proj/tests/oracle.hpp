#pragma once

// Reference computations that share no code with the library beyond the
// data types: their own elimination, and cochains evaluated as functions.

#include "tlau/bimodule.hpp"
#include "tlau/homlift.hpp"

#include <cstddef>
#include <vector>

namespace oracle {

using tlau::Scalar;
using Rows = std::vector<std::vector<Scalar>>;

/// Rank by plain forward elimination on a copy.
std::size_t rank(Rows rows);

/// Coboundary delta^n as explicit rows, one per (tuple, module coordinate) of C^{n+1},
/// built by evaluating delta on each basis cochain.
Rows coboundary_rows(std::size_t n, const tlau::Bimodule& x);

struct Dims {
    std::size_t c = 0, z = 0, b = 0, h = 0;
};

Dims cohomology(std::size_t n, const tlau::Bimodule& x);

/// Is there a module map R : K -> E with R S = lambda? Decided by whether lambda
/// lies in the span of {H S : H in Hom_C(K, E)}.
bool injective_lift_exists(const tlau::InjectiveProblem& p);
/// Is there a module map R : P -> K with S R = lambda?
bool projective_lift_exists(const tlau::ProjectiveProblem& p);

} // namespace oracle

#pragma once

#include "tlau/algebra.hpp"
#include "tlau/bimodule.hpp"
#include "tlau/homlift.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tlau {

/// An algebra with known characters and idempotents, in coordinates related
/// to its family's canonical basis by `basis` (columns = new basis vectors).
struct Specimen {
    std::string family;
    FiniteAlgebra algebra;
    std::vector<Vector> characters; // row vectors: chi(e_i)
    std::vector<Vector> idempotents;
    Matrix basis;
};

/// Fixed-order curated families of a dimension, in canonical bases.
/// dim 1: C1, Z1; dim 2: D2, C1+C1, N2, Z2; dim 3: T3, UT2, C1+D2, C1+C1+C1.
std::vector<Specimen> curated_families(std::size_t dim);
Specimen curated(const std::string& family);

/// Re-expresses the specimen in the basis given by the columns of p.
Specimen transport(const Specimen& s, const Matrix& p);

/// Deterministic splitmix64 stream.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(next() % n); }
    bool chance(std::size_t num, std::size_t den) { return below(den) < num; }
    /// Integer in [-k, k].
    long small(long k) { return static_cast<long>(below(static_cast<std::size_t>(2 * k + 1))) - k; }

private:
    std::uint64_t state_;
};

class InstanceGenerator {
public:
    explicit InstanceGenerator(std::uint64_t seed, std::size_t rejection_attempts = 10000)
        : rng_(seed), attempts_(rejection_attempts) {}

    Rng& rng() { return rng_; }

    /// Unit upper triangular times unit lower triangular, small entries; `gaussian` mixes in i.
    Matrix invertible(std::size_t n, bool gaussian = false);

    /// Random structure constants in {-1,0,1}, resampled until associative; nullopt after the cap.
    std::optional<FiniteAlgebra> rejection_sample(std::size_t dim);

    /// Curated family (random member, random basis) or, if allowed, a rejection-sampled algebra.
    Specimen algebra(std::size_t dim, bool unital_only, bool allow_sampled = true);

    /// All validated homomorphisms b -> a among the generator's candidates (zero first).
    std::vector<AlgebraHom> hom_candidates(const Specimen& b, const Specimen& a);
    AlgebraHom hom(const Specimen& b, const Specimen& a);

    /// Unital on both sides (hence essential) bimodule of dimension <= max_dim.
    std::optional<Bimodule> essential_bimodule(const Specimen& a, std::size_t max_dim);
    /// Any bimodule of dimension in [1, max_dim], possibly degenerate.
    Bimodule bimodule(const Specimen& a, std::size_t max_dim);

    /// Unital left module of exactly `dim`; requires a character when dim is not a multiple of dim C.
    LeftModule unital_module(const Specimen& c, std::size_t dim);
    Matrix module_map(const LeftModule& source, const LeftModule& target);

    std::optional<Diagram> mono(const Specimen& c, std::size_t dim_f, std::size_t dim_k);
    std::optional<Diagram> epi(const Specimen& c, std::size_t dim_k, std::size_t dim_f);

private:
    Bimodule conjugate(const Bimodule& e, std::size_t max_dim);
    LeftModule conjugate(const LeftModule& m);

    Rng rng_;
    std::size_t attempts_;
};

} // namespace tlau

#include "oracle.hpp"
#include "support.hpp"
#include "tlau/errors.hpp"
#include "tlau/hochschild.hpp"

#include <gtest/gtest.h>

using namespace support;

namespace {

Bimodule unital_c1()
{
    FiniteAlgebra c1 = alg("C1");
    return Bimodule::make(c1, 1, {Matrix{{1}}}, {Matrix{{1}}});
}

// Derivations of D2 into itself, solved by hand-written constraints on the four
// coefficients D(1) = p + q eps, D(eps) = r + s eps.
std::pair<std::size_t, std::size_t> d2_derivation_dims()
{
    // D(1.1) = 1.D(1) + D(1).1  ->  D(1) = 2 D(1)  ->  p = q = 0
    // D(1.eps) = D(eps) = 1.D(eps) + D(1).eps  ->  0 = D(1) eps = p eps  (already forced)
    // D(eps.eps) = 0 = eps D(eps) + D(eps) eps = 2 r eps  ->  r = 0
    oracle::Rows rows = {
        {1, 0, 0, 0}, // p
        {0, 1, 0, 0}, // q
        {0, 0, 1, 0}, // r
    };
    std::size_t derivations = 4 - oracle::rank(rows);
    // inner derivations ad_x(a) = a x - x a vanish since D2 is commutative
    return {derivations, 0};
}

} // namespace

TEST(Coboundary, Examples)
{
    EXPECT_TRUE(coboundary(0, unital_c1()).is_zero());
    Matrix d1 = coboundary(1, unital_c1());
    ASSERT_EQ(d1.rows(), 1u);
    ASSERT_EQ(d1.cols(), 1u);
    EXPECT_EQ(d1(0, 0), Scalar(1));
    EXPECT_EQ(rank(d1), 1u);
}

TEST(Coboundary, Shape)
{
    Bimodule e = regular_bimodule(alg("UT2"));
    Matrix d = coboundary(2, e);
    EXPECT_EQ(d.rows(), 27u * 3u);
    EXPECT_EQ(d.cols(), 9u * 3u);
    EXPECT_EQ(cochain_space_dim(2, 3, 3), 27u);
}

TEST(Coboundary, SizeCap)
{
    Bimodule e = regular_bimodule(alg("UT2"));
    EXPECT_THROW(coboundary(3, e, 100), SizeCap);
    EXPECT_NO_THROW(coboundary(1, e, 100));
}

TEST(Coboundary, MatchesOracle)
{
    InstanceGenerator g(17);
    for (int trial = 0; trial < 12; ++trial) {
        Specimen a = g.algebra(1 + trial % 3, false);
        Bimodule x = g.bimodule(a, 2);
        for (std::size_t n = 0; n <= 1; ++n) {
            Matrix d = coboundary(n, x);
            oracle::Rows rows = oracle::coboundary_rows(n, x);
            ASSERT_EQ(rows.size(), d.rows());
            for (std::size_t r = 0; r < d.rows(); ++r)
                for (std::size_t c = 0; c < d.cols(); ++c) ASSERT_EQ(d(r, c), rows[r][c]);
        }
    }
}

TEST(Cohomology, KnownValues)
{
    auto [der, inner] = d2_derivation_dims();
    EXPECT_EQ(der, 1u);
    EXPECT_EQ(inner, 0u);

    EXPECT_EQ(cohomology(1, unital_c1()).dim_h, 0u);
    Bimodule d2 = regular_bimodule(alg("D2"));
    CohomologyReport h0 = cohomology(0, d2);
    EXPECT_EQ(h0.dim_h, 2u);
    EXPECT_EQ(oracle::cohomology(0, d2).h, 2u);
    CohomologyReport h1 = cohomology(1, d2);
    EXPECT_EQ(h1.dim_z, der);
    EXPECT_EQ(h1.dim_b, inner);
    EXPECT_EQ(h1.dim_h, 1u);
    EXPECT_EQ(oracle::cohomology(1, d2).h, 1u);
}

TEST(Cohomology, DerivationSpaces)
{
    Bimodule d2 = regular_bimodule(alg("D2"));
    EXPECT_EQ(derivations(d2).cols(), 1u);
    EXPECT_EQ(inner_derivations(d2).cols(), 0u);
    Bimodule ut2 = regular_bimodule(alg("UT2"));
    CohomologyReport r = cohomology(1, ut2);
    EXPECT_EQ(derivations(ut2).cols(), r.dim_z);
    EXPECT_EQ(inner_derivations(ut2).cols(), r.dim_b);

    Bimodule zero = zero_bimodule(alg("D2"), 2);
    EXPECT_EQ(derivations(zero).cols(), 0u);
    EXPECT_EQ(inner_derivations(zero).cols(), 0u);
}

TEST(Cohomology, RepresentativesAreIndependentCocycles)
{
    InstanceGenerator g(23);
    for (int trial = 0; trial < 12; ++trial) {
        Specimen a = g.algebra(1 + trial % 3, false);
        Bimodule x = g.bimodule(a, 2);
        for (std::size_t n = 0; n <= 2; ++n) {
            if (cochain_space_dim(n + 1, a.algebra.dim(), x.dim()) > 200) continue;
            CohomologyReport r = cohomology(n, x);
            EXPECT_EQ(r.dim_h, r.dim_z - r.dim_b);
            ASSERT_EQ(r.representatives.size(), r.dim_h);
            Matrix d = coboundary(n, x);
            std::vector<Vector> cols;
            if (n > 0) {
                Matrix b = column_space(coboundary(n - 1, x));
                for (std::size_t c = 0; c < b.cols(); ++c) cols.push_back(b.col(c));
            }
            for (const auto& rep : r.representatives) {
                EXPECT_EQ(rep.degree, n);
                EXPECT_TRUE(is_zero(d.apply(rep.coeffs)));
                cols.push_back(rep.coeffs);
            }
            if (!cols.empty()) EXPECT_EQ(rank(Matrix::from_columns(cols, r.dim_c)), cols.size());
        }
    }
}

TEST(Cohomology, DimensionZeroAlgebra)
{
    FiniteAlgebra z = FiniteAlgebra::assemble(0, Tensor3(0, 0, 0));
    Bimodule e = zero_bimodule(z, 2);
    for (std::size_t n = 0; n <= 2; ++n) {
        CohomologyReport r = cohomology(n, e);
        if (n > 0) EXPECT_EQ(r.dim_h, 0u);
    }
}

TEST(VerifyComplex, Examples)
{
    EXPECT_TRUE(verify_complex(regular_bimodule(alg("D2")), 2));
    EXPECT_TRUE(verify_complex(zero_bimodule(alg("UT2"), 2), 2));
    CoboundaryConvention flipped{true};
    try {
        verify_complex(regular_bimodule(alg("D2")), 2, default_size_cap, flipped);
        FAIL() << "expected ComplexBroken";
    } catch (const ComplexBroken& e) {
        EXPECT_EQ(e.degree, 0u);
    }
}

TEST(VerifyComplex, GeneratedSuite)
{
    InstanceGenerator g(29);
    for (int trial = 0; trial < 20; ++trial) {
        Specimen a = g.algebra(1 + trial % 3, false);
        Bimodule x = g.bimodule(a, 2);
        EXPECT_TRUE(verify_complex(x, 1));
    }
}

TEST(Invariants, BasisIndependence)
{
    InstanceGenerator g(31);
    for (int trial = 0; trial < 10; ++trial) {
        Specimen a = g.algebra(1 + trial % 3, false);
        Bimodule x = g.bimodule(a, 2);
        Matrix p = g.invertible(a.algebra.dim(), true);
        Matrix qm = g.invertible(x.dim(), true);
        // A in the basis f_i = sum_k p(k,i) e_k, X in the basis given by the columns of qm
        FiniteAlgebra moved = change_basis(a.algebra, p);
        std::vector<Matrix> l, r;
        Matrix qinv = *inverse(qm);
        for (std::size_t i = 0; i < moved.dim(); ++i) {
            Vector fi = p.col(i);
            l.push_back(qinv * x.left_action(fi) * qm);
            r.push_back(qinv * x.right_action(fi) * qm);
        }
        Bimodule y = Bimodule::make(moved, x.dim(), l, r);
        for (std::size_t n = 0; n <= 1; ++n) EXPECT_EQ(cohomology(n, x).dim_h, cohomology(n, y).dim_h);
    }
}

TEST(Invariants, H0IsCommutant)
{
    InstanceGenerator g(37);
    for (int trial = 0; trial < 10; ++trial) {
        Specimen a = g.algebra(1 + trial % 3, true);
        Bimodule x = *g.essential_bimodule(a, 3);
        // {x : a.x = x.a for all a} as the kernel of the stacked differences
        Matrix stacked(a.algebra.dim() * x.dim(), x.dim());
        for (std::size_t i = 0; i < a.algebra.dim(); ++i) stacked.set_block(i * x.dim(), 0, x.left(i) - x.right(i));
        EXPECT_EQ(cohomology(0, x).dim_h, nullspace(stacked).cols());
    }
}

TEST(Invariants, OracleAgreement)
{
    InstanceGenerator g(41);
    for (int trial = 0; trial < 25; ++trial) {
        Specimen a = g.algebra(1 + trial % 3, false);
        Bimodule x = g.bimodule(a, 3);
        for (std::size_t n = 0; n <= 2; ++n) {
            if (cochain_space_dim(n, a.algebra.dim(), x.dim()) > 64) continue;
            oracle::Dims o = oracle::cohomology(n, x);
            CohomologyReport r = cohomology(n, x);
            EXPECT_EQ(r.dim_z, o.z);
            EXPECT_EQ(r.dim_b, o.b);
            EXPECT_EQ(r.dim_h, o.h);
        }
    }
}

TEST(LauCheck, C1Identity)
{
    LauProduct l = lau_product(identity_hom("C1"));
    LauCohomologyReport r = h1_lau_check(l, regular_bimodule(l.product));
    EXPECT_TRUE(r.hypotheses_hold);
    EXPECT_EQ(r.lhs_dim, 0u);
    EXPECT_EQ(r.rhs_a_dim, 0u);
    EXPECT_EQ(r.rhs_b_dim, 0u);
    EXPECT_TRUE(r.equal);
}

TEST(LauCheck, ZeroModule)
{
    LauProduct l = lau_product(identity_hom("C1"));
    LauCohomologyReport r = h1_lau_check(l, zero_bimodule(l.product, 2));
    EXPECT_FALSE(r.e_essential);
    EXPECT_FALSE(r.hypotheses_hold);
    EXPECT_EQ(r.lhs_dim + r.rhs_a_dim + r.rhs_b_dim, 0u);
    EXPECT_TRUE(r.equal);

    LauCohomologyReport r2 = hn_lau_check(l, zero_bimodule(l.product, 2), 2);
    EXPECT_EQ(r2.lhs_dim, 0u);
    EXPECT_TRUE(r2.equal);
}

TEST(LauCheck, D2OverC1AgainstOracle)
{
    LauProduct l = lau_product(hom("C1", "D2", mat({{1}, {0}})));
    Bimodule e = regular_bimodule(l.product);
    LauCohomologyReport r = h1_lau_check(l, e);
    EXPECT_TRUE(r.hypotheses_hold);
    EXPECT_TRUE(r.equal);

    Bimodule dual = dual_bimodule(e);
    EXPECT_EQ(r.lhs_dim, oracle::cohomology(1, dual).h);
    FactorBimodules f = restrict_to_factors(e, l, BEmbedding::complement);
    EXPECT_EQ(r.rhs_a_dim, oracle::cohomology(1, dual_bimodule(f.over_a)).h);
    EXPECT_EQ(r.rhs_b_dim, oracle::cohomology(1, dual_bimodule(f.over_b)).h);
}

TEST(LauCheck, DegreeOneMatchesH1)
{
    LauProduct l = lau_product(hom("C1", "D2", mat({{1}, {0}})));
    Bimodule e = regular_bimodule(l.product);
    LauCohomologyReport a = h1_lau_check(l, e), b = hn_lau_check(l, e, 1);
    EXPECT_EQ(a.lhs_dim, b.lhs_dim);
    EXPECT_EQ(a.rhs_a_dim, b.rhs_a_dim);
    EXPECT_EQ(a.rhs_b_dim, b.rhs_b_dim);
}

TEST(LauCheck, DegreeTwoSmall)
{
    LauProduct l = lau_product(identity_hom("C1"));
    Bimodule e = regular_bimodule(l.product);
    LauCohomologyReport r = hn_lau_check(l, e, 2);
    Bimodule dual = dual_bimodule(e);
    EXPECT_EQ(r.lhs_dim, oracle::cohomology(2, dual).h);
    EXPECT_TRUE(r.equal);
}

TEST(LauCheck, SizeCapRefuses)
{
    LauProduct l = lau_product(identity_hom("UT2"));
    EXPECT_THROW(hn_lau_check(l, regular_bimodule(l.product), 3, 1000), SizeCap);
}

TEST(LauCheck, CoordinateEmbeddingCanDisagree)
{
    // A = B = D2, T = id, E the regular bimodule of the product:
    // H^1(A x_T B, E*) has dimension 2, H^1(A, E*) dimension 1, and B seen through
    // b -> (-b, b) gives 1 while b -> (0, b) gives 2.
    LauProduct l = lau_product(identity_hom("D2"));
    Bimodule e = regular_bimodule(l.product);
    LauCohomologyReport r = h1_lau_check(l, e);
    EXPECT_TRUE(r.hypotheses_hold);
    EXPECT_EQ(r.lhs_dim, 2u);
    EXPECT_EQ(r.rhs_a_dim, 1u);
    EXPECT_EQ(r.rhs_b_dim, 1u);
    EXPECT_TRUE(r.equal);
    EXPECT_EQ(r.rhs_b_dim_coordinate, 2u);
    EXPECT_FALSE(r.equal_coordinate);

    Bimodule dual = dual_bimodule(e);
    EXPECT_EQ(oracle::cohomology(1, dual).h, 2u);
    FactorBimodules coord = restrict_to_factors(e, l);
    EXPECT_EQ(oracle::cohomology(1, dual_bimodule(coord.over_b)).h, 2u);
}

TEST(LauCheck, InducedVariants)
{
    LauProduct l = lau_product(identity_hom("C1"));
    Bimodule e = unital_c1();
    LauCohomologyReport s = hn_lau_check(l, e, LauVariant::standard, 1);
    EXPECT_EQ(s.variant, LauVariant::standard);
    EXPECT_TRUE(s.equal);
    LauCohomologyReport p = hn_lau_check(l, e, LauVariant::as_printed, 1);
    EXPECT_EQ(p.variant, LauVariant::as_printed);
    // (a,b).x = bx is still essential over the product
    EXPECT_TRUE(p.e_essential);
}

TEST(Amenability, Probe)
{
    AmenabilityProbe c1 = amenability_probe(alg("C1"), {regular_bimodule(alg("C1"))});
    EXPECT_TRUE(c1.all_zero);
    AmenabilityProbe d2 = amenability_probe(alg("D2"), {regular_bimodule(alg("D2"))});
    ASSERT_EQ(d2.h1_dims.size(), 1u);
    EXPECT_EQ(d2.h1_dims[0], oracle::cohomology(1, dual_bimodule(regular_bimodule(alg("D2")))).h);
    EXPECT_EQ(d2.h1_dims[0], 1u);
    EXPECT_FALSE(d2.all_zero);
    EXPECT_TRUE(amenability_probe(alg("D2"), {}).all_zero);
}

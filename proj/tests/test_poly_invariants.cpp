#include <gtest/gtest.h>

#include <cstdlib>

#include "oracles.hpp"
#include "orderpoly/catalog.hpp"
#include "orderpoly/order_poly.hpp"

using namespace orderpoly;

namespace {

UniPoly poly(std::initializer_list<Rational> c)
{
    return UniPoly(std::vector<Rational>(c));
}

Rational q(long n, long d = 1)
{
    Rational r(n, d);
    r.canonicalize();
    return r;
}

LabeledPoset natural(const Poset& p)
{
    return LabeledPoset(p, natural_labeling(p));
}

LabeledPoset strict(const Poset& p)
{
    return LabeledPoset(p, reversed_labeling(p));
}

const UniPoly kWeakChain2 = poly({0, q(1, 2), q(1, 2)});
const UniPoly kStrictChain2 = poly({0, q(-1, 2), q(1, 2)});
// t(t-1)(2t-1)/6
const UniPoly kStrictShrub2 = poly({0, q(1, 6), q(-1, 2), q(1, 3)});

} // namespace

TEST(BruteForce, Examples)
{
    EXPECT_EQ(order_poly_bruteforce(natural(make_antichain(0))), UniPoly::constant(1));
    EXPECT_EQ(order_poly_bruteforce(natural(make_chain(2))), kWeakChain2);
    EXPECT_EQ(order_poly_bruteforce(strict(make_chain(2))), kStrictChain2);
    std::mt19937_64 rng(8);
    for (unsigned n = 1; n <= 4; ++n) {
        const Poset a = make_antichain(n);
        EXPECT_EQ(order_poly_bruteforce(LabeledPoset(a, random_labeling(n, rng))), UniPoly::monomial(1, n));
    }
}

TEST(BruteForce, CountsMatchIndependentEnumeration)
{
    for (const auto& lp : sampled_labeled_catalog(4)) {
        for (unsigned n = 0; n <= 4; ++n) {
            EXPECT_EQ(count_omega_maps(lp, n), oracle::count_maps(lp, n));
        }
    }
}

TEST(BruteForce, SizeBound)
{
    EXPECT_THROW(order_poly_bruteforce(natural(make_antichain(4)), 3), OracleBoundError);
    EXPECT_NO_THROW(order_poly_bruteforce(natural(make_antichain(4)), 4));
}

TEST(MatrixRoute, Examples)
{
    EXPECT_EQ(order_poly_matrix(natural(make_chain(1))), UniPoly::identity());
    EXPECT_EQ(order_poly_matrix(natural(make_antichain(2))), poly({0, 0, 1}));
    EXPECT_EQ(order_poly_matrix(strict(make_shrub(2))), kStrictShrub2);
}

TEST(MatrixRoute, ThetaEntriesAreIntervalOrderPolynomials)
{
    for (const auto& lp : sampled_labeled_catalog(4)) {
        const ThetaMatrix theta = theta_matrix(lp);
        const auto& ideals = theta.ideals;
        for (std::size_t i = 0; i < ideals.size(); ++i) {
            for (std::size_t j = 0; j < ideals.size(); ++j) {
                if (ideals[i].is_subset_of(ideals[j])) {
                    EXPECT_EQ(theta.entries(i, j), order_poly_recursive(induced_subposet(lp, ideals[j] - ideals[i])));
                } else {
                    EXPECT_TRUE(theta.entries(i, j).is_zero());
                }
            }
        }
    }
}

TEST(RecursiveRoute, Examples)
{
    EXPECT_EQ(order_poly_recursive(natural(make_chain(1))), UniPoly::identity());
    EXPECT_EQ(order_poly_recursive(strict(make_shrub(1))), kStrictChain2);
    EXPECT_EQ(order_poly_recursive(natural(make_chain(2))), kWeakChain2);
    EXPECT_EQ(order_poly_recursive(natural(make_antichain(0))), UniPoly::constant(1));
}

TEST(RecursiveRoute, SharedMemoGivesSameAnswers)
{
    PolyMemo memo;
    for (const auto& lp : sampled_labeled_catalog(4)) {
        EXPECT_EQ(order_poly_recursive(lp, &memo), order_poly_recursive(lp));
    }
    EXPECT_GT(memo.size(), 0U);
}

TEST(Routes, LeadingCoefficientCountsLinearExtensions)
{
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const Poset& p : posets_up_to_iso(n)) {
            const UniPoly omega = order_poly_recursive(natural(p));
            EXPECT_EQ(omega.degree(), static_cast<long>(n));
            EXPECT_EQ(omega.leading_coefficient() * Rational(factorial(static_cast<unsigned>(n))),
                      Rational(oracle::linear_extensions_by_permutation(p)));
        }
    }
}

TEST(Routes, ChainValues)
{
    // weakly increasing maps of a k-chain into [n]: binom(n + k - 1, k)
    for (unsigned k = 1; k <= 6; ++k) {
        const UniPoly w = order_poly_recursive(natural(make_chain(k)));
        const UniPoly s = order_poly_recursive(strict(make_chain(k)));
        for (unsigned n = 0; n <= 8; ++n) {
            EXPECT_EQ(w.eval(n), Rational(binomial(n + k - 1, k)));
            EXPECT_EQ(s.eval(n), Rational(binomial(n, k)));
        }
    }
}

TEST(Phi, Examples)
{
    EXPECT_EQ(phi(natural(make_chain(1))), 1);
    EXPECT_EQ(phi(strict(make_shrub(1))), q(-1, 2));
    EXPECT_EQ(phi(natural(make_antichain(2))), 0);
    EXPECT_EQ(phi(natural(make_antichain(0))), 0);
}

TEST(Phi, IsLinearCoefficientOfOmega)
{
    for (const auto& lp : sampled_labeled_catalog(5)) {
        const Rational p = phi(lp);
        EXPECT_EQ(p, order_poly_recursive(lp).coefficient(1));
        if (lp.size() <= 4) {
            EXPECT_EQ(p, phi_from_matrix(lp));
        }
    }
}

TEST(StructuralIdentities, Examples)
{
    for (const LabeledPoset& lp : {natural(make_chain(1)), natural(make_antichain(2)), strict(make_chain(2))}) {
        EXPECT_TRUE(convolution_check(lp));
        EXPECT_TRUE(phi_recursion_check(lp));
        EXPECT_TRUE(derivative_identity_check(lp));
    }
    EXPECT_EQ(omega_from_phi(natural(make_chain(1))), UniPoly::identity());
    EXPECT_EQ(omega_from_phi(natural(make_antichain(2))), poly({0, 0, 1}));
}

TEST(StructuralIdentities, ExhaustiveSmallCatalog)
{
    PolyMemo memo;
    for (const auto& lp : exhaustive_labeled_catalog(4)) {
        EXPECT_TRUE(convolution_check(lp));
        EXPECT_TRUE(phi_recursion_check(lp));
        EXPECT_TRUE(derivative_identity_check(lp));
        EXPECT_EQ(omega_from_phi(lp), order_poly_recursive(lp, &memo));
    }
}

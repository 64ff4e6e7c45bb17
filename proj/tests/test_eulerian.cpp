#include <gtest/gtest.h>

#include "oracles.hpp"
#include "orderpoly/catalog.hpp"
#include "orderpoly/eulerian.hpp"

using namespace orderpoly;

namespace {

UniPoly lpoly(std::initializer_list<Rational> c)
{
    return UniPoly(std::vector<Rational>(c), "lambda");
}

LabeledPoset natural(const Poset& p)
{
    return LabeledPoset(p, natural_labeling(p));
}

LabeledPoset strict(const Poset& p)
{
    return LabeledPoset(p, reversed_labeling(p));
}

} // namespace

TEST(EulerianFromChains, Examples)
{
    EXPECT_EQ(eulerian_from_chains(natural(make_chain(1))).e, lpoly({0, 1}));
    EXPECT_EQ(eulerian_from_chains(natural(make_antichain(2))).e, lpoly({0, 1, 1}));
    EXPECT_EQ(eulerian_from_chains(strict(make_chain(2))).e, lpoly({0, 0, 1}));
    const EulerianPair empty = eulerian_from_chains(natural(make_antichain(0)));
    EXPECT_EQ(empty.e, lpoly({1}));
    EXPECT_EQ(empty.e_tilde, LocalizedRatio(lpoly({1}), 1));
}

TEST(EulerianFromChains, TildeIsRatioOverPole)
{
    for (const auto& lp : sampled_labeled_catalog(5)) {
        const EulerianPair pair = eulerian_from_chains(lp);
        EXPECT_EQ(pair.e_tilde, LocalizedRatio(pair.e, static_cast<unsigned>(lp.size() + 1)));
    }
}

TEST(EulerianRecursive, Examples)
{
    EXPECT_EQ(eulerian_recursive(natural(make_chain(1))), lpoly({0, 1}));
    EXPECT_EQ(eulerian_recursive(natural(make_antichain(2))), lpoly({0, 1, 1}));
    EXPECT_EQ(e_tilde_recursive(natural(make_chain(1))), LocalizedRatio(lpoly({0, 1}), 2));
}

TEST(EulerianRecursive, AgreesWithChains)
{
    PolyMemo memo;
    LocalizedMemo lmemo;
    for (const auto& lp : sampled_labeled_catalog(5)) {
        const EulerianPair pair = eulerian_from_chains(lp);
        EXPECT_EQ(eulerian_recursive(lp, &memo), pair.e);
        EXPECT_EQ(e_tilde_recursive(lp, &lmemo), pair.e_tilde);
    }
}

TEST(EulerianSeries, Examples)
{
    EXPECT_TRUE(eulerian_series_check(natural(make_chain(1)), 4));
    EXPECT_TRUE(eulerian_series_check(natural(make_antichain(2)), 4));
    EXPECT_THROW(eulerian_series_check(natural(make_antichain(2)), 3), std::invalid_argument);
}

TEST(EulerianSeries, Catalog)
{
    for (const auto& lp : sampled_labeled_catalog(5)) {
        EXPECT_TRUE(eulerian_series_check(lp, static_cast<unsigned>(2 * lp.size() + 2)));
    }
}

TEST(EulerianValues, AtOneCountsLinearExtensions)
{
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const Poset& p : posets_up_to_iso(n)) {
            const auto extensions = Rational(oracle::linear_extensions_by_permutation(p));
            EXPECT_EQ(eulerian_recursive(natural(p)).eval(1), extensions);
            EXPECT_EQ(eulerian_recursive(strict(p)).eval(1), extensions);
        }
    }
}

TEST(AntichainEulerian, Examples)
{
    EXPECT_EQ(antichain_eulerian_binomial(1), lpoly({0, 1}));
    EXPECT_EQ(antichain_eulerian_binomial(2), lpoly({0, 1, 1}));
    EXPECT_EQ(antichain_eulerian_binomial(3), lpoly({0, 1, 4, 1}));
    EXPECT_EQ(antichain_eulerian_derivative(1), lpoly({0, 1}));
    EXPECT_EQ(antichain_eulerian_derivative(2), lpoly({0, 1, 1}));
    EXPECT_EQ(antichain_eulerian_binomial(0), lpoly({1}));
}

TEST(AntichainEulerian, DescentStatisticOracle)
{
    for (unsigned n = 1; n <= 8; ++n) {
        const UniPoly expected = oracle::eulerian_by_descents(n);
        EXPECT_EQ(antichain_eulerian_binomial(n), expected);
        EXPECT_EQ(antichain_eulerian_derivative(n), expected);
        EXPECT_EQ(eulerian_from_chains(natural(make_antichain(n))).e, expected);
    }
}

TEST(AntichainEulerian, RecursionsAgreeAndSumToFactorial)
{
    for (unsigned n = 1; n <= 10; ++n) {
        EXPECT_EQ(antichain_eulerian_binomial(n), antichain_eulerian_derivative(n));
        EXPECT_EQ(antichain_eulerian_binomial(n).eval(1), Rational(factorial(n)));
    }
}

TEST(ChainPolynomialIdentity, AnchoredFormHoldsOnExhaustiveCatalog)
{
    for (const auto& lp : exhaustive_labeled_catalog(4)) {
        EXPECT_TRUE(chain_polynomial_identity_check(lp));
    }
}

TEST(ChainPolynomialIdentity, UnanchoredFormHoldsExactlyForNaturalLabelings)
{
    for (const auto& lp : exhaustive_labeled_catalog(4)) {
        EXPECT_EQ(chain_polynomial_identity_check_unanchored(lp), is_naturally_labeled(lp));
    }
}

TEST(ChainPolynomialIdentity, StrictTwoChainCounterexample)
{
    // e = lambda^2, but the open graph has the single vertex {bottom}, so the
    // unanchored form would give lambda (1 - lambda)(1 + lambda/(1 - lambda)) = lambda.
    const LabeledPoset lp = strict(make_chain(2));
    EXPECT_EQ(eulerian_recursive(lp), lpoly({0, 0, 1}));
    EXPECT_FALSE(chain_polynomial_identity_check_unanchored(lp));
    EXPECT_TRUE(chain_polynomial_identity_check(lp));
}

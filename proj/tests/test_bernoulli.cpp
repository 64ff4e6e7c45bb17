#include <gtest/gtest.h>

#include "oracles.hpp"
#include "orderpoly/bernoulli.hpp"
#include "orderpoly/omega_graph.hpp"

using namespace orderpoly;

namespace {

Rational q(long n, long d = 1)
{
    Rational r(n, d);
    r.canonicalize();
    return r;
}

} // namespace

TEST(BernoulliOracle, SmallValues)
{
    const BernoulliTable t = bernoulli_numbers_oracle(4);
    EXPECT_EQ(t.b[0], 1);
    EXPECT_EQ(t.b[1], q(-1, 2));
    EXPECT_EQ(t.b[2], q(1, 6));
    EXPECT_EQ(t.b[3], 0);
    EXPECT_EQ(t.B[1], UniPoly(std::vector<Rational>{q(-1, 2), 1}));
    for (unsigned n = 0; n <= 4; ++n) {
        EXPECT_EQ(t.B[n].eval(0), t.b[n]);
    }
}

TEST(BernoulliOracle, MatchesAkiyamaTanigawa)
{
    const BernoulliTable t = bernoulli_numbers_oracle(30);
    const auto independent = oracle::bernoulli_akiyama_tanigawa(30);
    for (unsigned n = 0; n <= 30; ++n) {
        EXPECT_EQ(t.b[n], independent[n]) << "n = " << n;
    }
    EXPECT_EQ(t.b[12], q(-691, 2730));
}

TEST(BernoulliOracle, PolynomialDifferenceProperty)
{
    // B_n(t + 1) - B_n(t) = n t^{n-1}
    const BernoulliTable t = bernoulli_numbers_oracle(10);
    for (unsigned n = 1; n <= 10; ++n) {
        EXPECT_EQ(t.B[n].shifted(1) - t.B[n], UniPoly::monomial(n, n - 1));
    }
}

TEST(BernoulliFromShrub, Examples)
{
    EXPECT_EQ(bernoulli_from_shrub(1), q(-1, 2));
    EXPECT_EQ(bernoulli_from_shrub(2), q(1, 6));
    EXPECT_EQ(bernoulli_from_shrub(3), 0);
    EXPECT_THROW(bernoulli_from_shrub(0), std::invalid_argument);
}

TEST(BernoulliFromShrub, ThroughTwelve)
{
    const auto independent = oracle::bernoulli_akiyama_tanigawa(12);
    for (unsigned n = 1; n <= 12; ++n) {
        EXPECT_EQ(bernoulli_from_shrub(n), independent[n]) << "n = " << n;
    }
}

TEST(BernoulliMultinomial, Examples)
{
    EXPECT_EQ(bernoulli_multinomial(1), q(-1, 2));
    EXPECT_EQ(bernoulli_multinomial(2), q(1, 6));
    const auto independent = oracle::bernoulli_akiyama_tanigawa(15);
    for (unsigned n = 1; n <= 15; ++n) {
        EXPECT_EQ(bernoulli_multinomial(n), independent[n]);
    }
}

TEST(BernoulliMultinomial, ScaledNumeratorIsIntegral)
{
    const auto independent = oracle::bernoulli_akiyama_tanigawa(20);
    for (unsigned n = 1; n <= 20; ++n) {
        const Rational scaled = independent[n] * Rational(factorial(n + 1));
        EXPECT_EQ(scaled.get_den(), 1);
        EXPECT_EQ(scaled.get_num(), bernoulli_scaled_numerator(n));
    }
}

TEST(ShrubOrderPolynomial, Examples)
{
    EXPECT_TRUE(shrub_order_poly_check(1));
    EXPECT_TRUE(shrub_order_poly_check(2));
    for (unsigned n = 3; n <= 8; ++n) {
        EXPECT_TRUE(shrub_order_poly_check(n)) << "n = " << n;
    }
}

TEST(ShrubPathCounts, FormulaMatchesOmegaGraph)
{
    for (unsigned n = 1; n <= 8; ++n) {
        const Poset s = make_shrub(n);
        const PathCounts pc = count_paths(build_omega_graph(LabeledPoset(s, reversed_labeling(s))));
        EXPECT_EQ(pc.c, shrub_path_counts_formula(n)) << "n = " << n;
    }
}

TEST(CompositionSums, Examples)
{
    const CompositionSums one = composition_sums(1);
    EXPECT_EQ(one.factorial_weighted, q(-1, 2));
    EXPECT_EQ(one.shifted_factorial_weighted, q(-1, 2));
    const CompositionSums two = composition_sums(2);
    EXPECT_EQ(two.factorial_weighted, q(1, 12));
    EXPECT_EQ(two.shifted_factorial_weighted, q(1, 12));
    for (unsigned n = 1; n <= 15; ++n) {
        EXPECT_TRUE(composition_sum_identity_check(n));
    }
}

TEST(Compositions, CountIsPowerOfTwo)
{
    for (unsigned n = 1; n <= 10; ++n) {
        std::size_t count = 0;
        for_each_composition(n, [&](const std::vector<unsigned>& parts) {
            unsigned sum = 0;
            for (auto p : parts) {
                EXPECT_GE(p, 1U);
                sum += p;
            }
            EXPECT_EQ(sum, n);
            ++count;
        });
        EXPECT_EQ(count, std::size_t{1} << (n - 1));
    }
}

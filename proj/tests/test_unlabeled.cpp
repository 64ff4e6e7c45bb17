#include <gtest/gtest.h>

#include "orderpoly/catalog.hpp"
#include "orderpoly/order_poly.hpp"
#include "orderpoly/unlabeled.hpp"

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

} // namespace

TEST(UnlabeledWeak, Examples)
{
    EXPECT_EQ(order_poly_unlabeled(make_chain(2)), poly({0, q(1, 2), q(1, 2)}));
    for (unsigned n = 0; n <= 5; ++n) {
        EXPECT_EQ(order_poly_unlabeled(make_antichain(n)), UniPoly::monomial(1, n));
    }
}

TEST(UnlabeledStrict, Examples)
{
    EXPECT_EQ(strict_order_poly(make_chain(2)), poly({0, q(-1, 2), q(1, 2)}));
    EXPECT_EQ(strict_order_poly(make_antichain(3)), UniPoly::monomial(1, 3));
    EXPECT_EQ(strict_order_poly(make_shrub(2)), poly({0, q(1, 6), q(-1, 2), q(1, 3)}));
}

TEST(UnlabeledNabla, Examples)
{
    EXPECT_EQ(signed_order_poly_nabla(make_chain(1)), poly({0, -1}));
    EXPECT_EQ(signed_order_poly_nabla(make_antichain(2)), poly({0, 0, 1}));
}

TEST(UnlabeledRoutes, MatchLabeledRoutes)
{
    std::mt19937_64 rng(17);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const Poset& p : posets_up_to_iso(n)) {
            const UniPoly weak = order_poly_unlabeled(p);
            const UniPoly strict = strict_order_poly(p);
            for (int i = 0; i < 2; ++i) {
                const auto order = i == 0 ? linear_extension(p) : random_linear_extension(p, rng);
                EXPECT_EQ(weak, order_poly_matrix(LabeledPoset(p, labeling_from_extension(n, order, false))));
                EXPECT_EQ(strict, order_poly_matrix(LabeledPoset(p, labeling_from_extension(n, order, true))));
            }
            const Rational sign = n % 2 == 0 ? 1 : -1;
            EXPECT_EQ(sign * signed_order_poly_nabla(p), weak);
        }
    }
}

TEST(Reciprocity, Examples)
{
    EXPECT_TRUE(reciprocity_check(make_chain(1)));
    EXPECT_TRUE(reciprocity_check(make_chain(2)));
    EXPECT_THROW(reciprocity_check(make_antichain(0)), std::invalid_argument);
}

TEST(Reciprocity, AllPosetsUpToSix)
{
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const Poset& p : posets_up_to_iso(n)) {
            EXPECT_TRUE(reciprocity_check(p));
        }
    }
}

TEST(ValuesAtOne, Examples)
{
    EXPECT_EQ(strict_order_poly(make_antichain(3)).eval(1), 1);
    EXPECT_EQ(order_poly_unlabeled(make_antichain(3)).eval(-1), -1);
    EXPECT_EQ(strict_order_poly(make_chain(2)).eval(1), 0);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const Poset& p : posets_up_to_iso(n)) {
            EXPECT_TRUE(strict_value_at_one_check(p));
        }
    }
}

TEST(RecursionWork, MinimalSubsetsNeverDoMoreWork)
{
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const Poset& p : posets_up_to_iso(n)) {
            UnlabeledRunStats all;
            UnlabeledRunStats minimal;
            run_unlabeled_invariant(weak_order_spec(), p, &all);
            run_unlabeled_invariant(strict_order_spec(), p, &minimal);
            EXPECT_LE(minimal.summands, all.summands);
            EXPECT_LE(minimal.expanded, all.expanded);
        }
    }
    UnlabeledRunStats chain;
    run_unlabeled_invariant(weak_order_spec(), make_chain(4), &chain);
    // chains of length 4, 3, 2, 1, each expanded once
    EXPECT_EQ(chain.expanded, 4U);
    EXPECT_EQ(chain.summands, 4U + 3U + 2U + 1U);
}

TEST(UnlabeledSpecs, CarrierMismatch)
{
    UnlabeledInvariantSpec bad = weak_order_spec();
    bad.base = QSym::one(2);
    EXPECT_THROW(run_unlabeled_invariant(bad, make_chain(1)), CarrierMismatch);
}

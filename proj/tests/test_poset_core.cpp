#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "orderpoly/catalog.hpp"
#include "orderpoly/poset.hpp"

using namespace orderpoly;

namespace {

ElementSet set_of(std::initializer_list<std::size_t> xs)
{
    ElementSet s;
    for (auto x : xs) {
        s = s | ElementSet::singleton(x);
    }
    return s;
}

} // namespace

TEST(MakePoset, ClosesTransitively)
{
    const Poset p = make_poset(3, {{0, 1}, {1, 2}});
    EXPECT_TRUE(p.less(0, 2));
    EXPECT_EQ(p, make_chain(3));
    EXPECT_EQ(p.covers(), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}}));
}

TEST(MakePoset, Antichain)
{
    const Poset p = make_poset(2, {});
    EXPECT_TRUE(p.is_antichain());
    EXPECT_EQ(p, make_antichain(2));
}

TEST(MakePoset, Errors)
{
    EXPECT_THROW(make_poset(3, {{0, 1}, {1, 2}, {2, 0}}), PosetError);
    EXPECT_THROW(make_poset(2, {{0, 2}}), PosetError);
    EXPECT_THROW(make_poset(2, {{1, 1}}), PosetError);
    EXPECT_THROW(make_poset(65, {}), PosetError);
}

TEST(Constructors, Shrubs)
{
    EXPECT_EQ(make_shrub(0).size(), 1U);
    const Poset s2 = make_shrub(2);
    EXPECT_EQ(s2.size(), 3U);
    EXPECT_TRUE(s2.less(0, 1));
    EXPECT_TRUE(s2.less(0, 2));
    EXPECT_FALSE(s2.comparable(1, 2));
    EXPECT_EQ(make_antichain(0).size(), 0U);
}

TEST(Labelings, NaturalAndReversed)
{
    const Poset c = make_chain(3);
    EXPECT_EQ(natural_labeling(c), (Labeling{1, 2, 3}));
    EXPECT_EQ(reversed_labeling(c), (Labeling{3, 2, 1}));
    const Poset s2 = make_shrub(2);
    EXPECT_EQ(natural_labeling(s2)[0], 1U);
    EXPECT_EQ(reversed_labeling(s2)[0], 3U);
    const Poset a = make_antichain(3);
    const LabeledPoset any(a, {2, 3, 1});
    EXPECT_TRUE(is_naturally_labeled(any));
}

TEST(Labelings, Validation)
{
    EXPECT_THROW(LabeledPoset(make_chain(2), {1, 1}), PosetError);
    EXPECT_THROW(LabeledPoset(make_chain(2), {0, 1}), PosetError);
    EXPECT_THROW(LabeledPoset(make_chain(2), {1}), PosetError);
}

TEST(OmegaNatural, NaturalLabelingMakesEverySubsetNatural)
{
    for (const Poset& p : posets_up_to_iso(4)) {
        const LabeledPoset lp(p, natural_labeling(p));
        for (std::uint64_t b = 0; b < (1U << p.size()); ++b) {
            EXPECT_TRUE(is_omega_natural(lp, ElementSet(b)));
        }
    }
}

TEST(OmegaNatural, StrictLabelingAllowsExactlyAntichains)
{
    for (const Poset& p : posets_up_to_iso(4)) {
        const LabeledPoset lp(p, reversed_labeling(p));
        for (std::uint64_t b = 0; b < (1U << p.size()); ++b) {
            const ElementSet s(b);
            bool antichain = true;
            for (auto x : s.members()) {
                antichain = antichain && (p.above(x) & s).empty();
            }
            EXPECT_EQ(is_omega_natural(lp, s), antichain);
        }
    }
}

TEST(OmegaNatural, MatchesPairwiseOracle)
{
    std::mt19937_64 rng(1);
    for (const Poset& p : posets_up_to_iso(5)) {
        const LabeledPoset lp(p, random_labeling(p.size(), rng));
        for (std::uint64_t b = 0; b < (1U << p.size()); ++b) {
            EXPECT_EQ(is_omega_natural(lp, ElementSet(b)), oracle::labels_preserve_order(lp, b));
        }
    }
}

TEST(OmegaNatural, StrictTwoChain)
{
    const LabeledPoset lp(make_chain(2), {2, 1});
    EXPECT_FALSE(is_omega_natural(lp, set_of({0, 1})));
    EXPECT_TRUE(is_omega_natural(lp, set_of({0})));
}

TEST(Ideals, Examples)
{
    EXPECT_EQ(enumerate_ideals(make_chain(3)),
              (std::vector<ElementSet>{ElementSet(), set_of({0}), set_of({0, 1}), set_of({0, 1, 2})}));
    EXPECT_EQ(enumerate_ideals(make_antichain(2)),
              (std::vector<ElementSet>{ElementSet(), set_of({0}), set_of({1}), set_of({0, 1})}));
    EXPECT_EQ(enumerate_ideals(make_shrub(2)),
              (std::vector<ElementSet>{ElementSet(), set_of({0}), set_of({0, 1}), set_of({0, 2}), set_of({0, 1, 2})}));
}

TEST(Ideals, MatchSubsetFilterOracle)
{
    for (std::size_t n = 0; n <= 6; ++n) {
        for (const Poset& p : posets_up_to_iso(n)) {
            auto expected = oracle::ideals_by_filter(p);
            std::sort(expected.begin(), expected.end(), [](ElementSet a, ElementSet b) {
                return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
            });
            EXPECT_EQ(enumerate_ideals(p), expected);
            for (ElementSet s : expected) {
                EXPECT_TRUE(is_ideal(p, s));
            }
        }
    }
}

TEST(Ideals, OmegaNaturalIdeals)
{
    const Poset s3 = make_shrub(3);
    EXPECT_EQ(omega_natural_ideals(LabeledPoset(s3, reversed_labeling(s3))),
              (std::vector<ElementSet>{ElementSet(), set_of({0})}));
    const Poset a2 = make_antichain(2);
    EXPECT_EQ(omega_natural_ideals(LabeledPoset(a2, {2, 1})).size(), 4U);
    for (const Poset& p : posets_up_to_iso(4)) {
        EXPECT_EQ(omega_natural_ideals(LabeledPoset(p, natural_labeling(p))), enumerate_ideals(p));
    }
}

TEST(SubPosets, MinimumElementsAndInduced)
{
    EXPECT_EQ(minimum_elements(make_chain(4)), set_of({0}));
    EXPECT_EQ(minimum_elements(make_antichain(3)), set_of({0, 1, 2}));
    const Poset s2 = make_shrub(2);
    const LabeledPoset lp(s2, natural_labeling(s2));
    const LabeledPoset rest = induced_subposet(lp, set_of({1, 2}));
    EXPECT_TRUE(rest.poset().is_antichain());
    EXPECT_EQ(rest.size(), 2U);
}

TEST(Canonical, RelabelsToRanks)
{
    EXPECT_EQ(canonicalize(LabeledPoset(make_chain(2), {3, 7})).omega(), (Labeling{1, 2}));
    EXPECT_EQ(canonicalize(LabeledPoset(make_chain(2), {7, 3})).omega(), (Labeling{2, 1}));
    const LabeledPoset c(make_chain(3), {2, 3, 1});
    EXPECT_EQ(canonicalize(c), c);
    EXPECT_EQ(canonicalize(canonicalize(LabeledPoset(make_chain(3), {20, 30, 10}))), c);
}

TEST(Canonical, LabeledKeyIgnoresElementNumbering)
{
    // The same labeled shrub with the root stored at different indices.
    const LabeledPoset a(make_poset(3, {{0, 1}, {0, 2}}), {3, 1, 2});
    const LabeledPoset b(make_poset(3, {{2, 0}, {2, 1}}), {1, 2, 3});
    EXPECT_EQ(labeled_key(a), labeled_key(b));
    const LabeledPoset c(make_poset(3, {{0, 1}, {0, 2}}), {1, 2, 3});
    EXPECT_NE(labeled_key(a), labeled_key(c));
}

TEST(Canonical, UnlabeledKeyIsIsomorphismInvariant)
{
    std::mt19937_64 rng(2);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (const Poset& p : posets_up_to_iso(n)) {
            std::vector<std::size_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::pair<std::size_t, std::size_t>> rel;
            for (std::size_t x = 0; x < n; ++x) {
                for (auto y : p.above(x).members()) {
                    rel.emplace_back(perm[x], perm[y]);
                }
            }
            EXPECT_EQ(unlabeled_key(make_poset(n, rel)), unlabeled_key(p));
        }
    }
}

TEST(Catalog, PosetCountsUpToIsomorphism)
{
    // number of unlabeled posets on n points
    const std::vector<std::size_t> expected{1, 1, 2, 5, 16, 63, 318, 2045};
    for (std::size_t n = 0; n < expected.size(); ++n) {
        EXPECT_EQ(posets_up_to_iso(n).size(), expected[n]) << "n = " << n;
    }
}

TEST(Catalog, LabelingsAreDistinctClasses)
{
    for (const Poset& p : posets_up_to_iso(4)) {
        const auto all = all_labelings(p);
        std::set<std::string> keys;
        for (const auto& lp : all) {
            keys.insert(labeled_key(lp));
        }
        EXPECT_EQ(keys.size(), all.size());
    }
    // A chain of 3 has 3! distinguishable labelings, an antichain only one.
    EXPECT_EQ(all_labelings(make_chain(3)).size(), 6U);
    EXPECT_EQ(all_labelings(make_antichain(3)).size(), 1U);
}

TEST(Catalog, SampledLabelingsAreDeterministic)
{
    const Poset p = make_shrub(3);
    const auto a = sampled_labelings(p, 42);
    const auto b = sampled_labelings(p, 42);
    ASSERT_EQ(a.size(), 5U);
    EXPECT_EQ(a, b);
    EXPECT_TRUE(is_naturally_labeled(a[0]));
}

TEST(LinearExtensions, RandomExtensionsAreValid)
{
    std::mt19937_64 rng(4);
    for (const Poset& p : posets_up_to_iso(5)) {
        const auto order = random_linear_extension(p, rng);
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (std::size_t j = i + 1; j < order.size(); ++j) {
                EXPECT_FALSE(p.less(order[j], order[i]));
            }
        }
    }
}

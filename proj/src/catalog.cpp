#include "orderpoly/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

namespace orderpoly {

namespace {

Poset extend_above(const Poset& p, ElementSet below)
{
    const std::size_t n = p.size();
    std::vector<std::pair<std::size_t, std::size_t>> relations;
    for (std::size_t y = 0; y < n; ++y) {
        for (auto x : p.below(y).members()) {
            relations.emplace_back(x, y);
        }
    }
    for (auto x : below.members()) {
        relations.emplace_back(x, n);
    }
    return make_poset(n + 1, relations);
}

} // namespace

std::vector<Poset> posets_up_to_iso(std::size_t n)
{
    std::vector<Poset> level{make_antichain(0)};
    for (std::size_t size = 1; size <= n; ++size) {
        std::vector<Poset> next;
        std::unordered_set<std::string> seen;
        for (const Poset& p : level) {
            for (ElementSet ideal : enumerate_ideals(p)) {
                Poset q = extend_above(p, ideal);
                if (seen.insert(unlabeled_key(q)).second) {
                    next.push_back(std::move(q));
                }
            }
        }
        level = std::move(next);
    }
    return level;
}

std::vector<LabeledPoset> sampled_labelings(const Poset& p, std::uint64_t seed, std::size_t random_count)
{
    std::vector<LabeledPoset> out;
    out.emplace_back(p, natural_labeling(p));
    out.emplace_back(p, reversed_labeling(p));
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < random_count; ++i) {
        out.emplace_back(p, random_labeling(p.size(), rng));
    }
    return out;
}

std::vector<LabeledPoset> all_labelings(const Poset& p)
{
    std::vector<LabeledPoset> out;
    std::unordered_set<std::string> seen;
    Labeling omega(p.size());
    std::iota(omega.begin(), omega.end(), 1U);
    do {
        LabeledPoset lp(p, omega);
        if (seen.insert(labeled_key(lp)).second) {
            out.push_back(std::move(lp));
        }
    } while (std::next_permutation(omega.begin(), omega.end()));
    return out;
}

std::vector<LabeledPoset> sampled_labeled_catalog(std::size_t max_size, std::uint64_t seed)
{
    std::vector<LabeledPoset> out;
    std::uint64_t index = 0;
    for (std::size_t n = 1; n <= max_size; ++n) {
        for (const Poset& p : posets_up_to_iso(n)) {
            auto batch = sampled_labelings(p, seed + index++);
            std::move(batch.begin(), batch.end(), std::back_inserter(out));
        }
    }
    return out;
}

std::vector<LabeledPoset> exhaustive_labeled_catalog(std::size_t max_size)
{
    std::vector<LabeledPoset> out;
    for (std::size_t n = 1; n <= max_size; ++n) {
        for (const Poset& p : posets_up_to_iso(n)) {
            auto batch = all_labelings(p);
            std::move(batch.begin(), batch.end(), std::back_inserter(out));
        }
    }
    return out;
}

} // namespace orderpoly

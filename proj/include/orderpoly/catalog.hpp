#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "orderpoly/poset.hpp"

namespace orderpoly {

/// One representative of every isomorphism class of n-element posets, built
/// by adding a new maximal element above each order ideal of each smaller
/// representative. Representatives are naturally indexed (x < y implies
/// index x < index y). Counts: 1, 1, 2, 5, 16, 63, 318, 2045.
std::vector<Poset> posets_up_to_iso(std::size_t n);

/// Natural, reversed and `random_count` pseudo-random labelings, seeded
/// deterministically from `seed`.
std::vector<LabeledPoset> sampled_labelings(const Poset& p, std::uint64_t seed, std::size_t random_count = 3);

/// Every labeling of p up to labeled-poset equivalence.
std::vector<LabeledPoset> all_labelings(const Poset& p);

/// sampled_labelings of every poset with 1..max_size elements.
std::vector<LabeledPoset> sampled_labeled_catalog(std::size_t max_size, std::uint64_t seed = 20240601);

/// all_labelings of every poset with 1..max_size elements.
std::vector<LabeledPoset> exhaustive_labeled_catalog(std::size_t max_size);

} // namespace orderpoly

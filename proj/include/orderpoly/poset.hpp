#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orderpoly {

/// Posets are limited to this many elements so that element sets fit in one word.
inline constexpr std::size_t kMaxElements = 64;

/// Subset of a poset's elements 0..n-1.
class ElementSet {
public:
    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr ElementSet full(std::size_t n)
    {
        return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr ElementSet singleton(std::size_t x) { return ElementSet(std::uint64_t{1} << x); }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(std::size_t x) const noexcept { return (bits_ >> x) & 1U; }
    constexpr bool is_subset_of(ElementSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }

    constexpr ElementSet operator|(ElementSet o) const noexcept { return ElementSet(bits_ | o.bits_); }
    constexpr ElementSet operator&(ElementSet o) const noexcept { return ElementSet(bits_ & o.bits_); }
    /// set difference
    constexpr ElementSet operator-(ElementSet o) const noexcept { return ElementSet(bits_ & ~o.bits_); }

    constexpr auto operator<=>(const ElementSet&) const = default;

    std::vector<std::size_t> members() const;
    /// "{0,2,3}"
    std::string to_string() const;

private:
    std::uint64_t bits_ = 0;
};

class PosetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Finite strict partial order on elements 0..n-1, transitively closed.
class Poset {
public:
    Poset() = default;

    std::size_t size() const noexcept { return below_.size(); }
    /// x < y
    bool less(std::size_t x, std::size_t y) const { return above_[x].contains(y); }
    bool comparable(std::size_t x, std::size_t y) const { return less(x, y) || less(y, x); }
    /// Elements strictly below x.
    ElementSet below(std::size_t x) const { return below_[x]; }
    /// Elements strictly above x.
    ElementSet above(std::size_t x) const { return above_[x]; }
    ElementSet elements() const { return ElementSet::full(size()); }

    /// Hasse diagram edges (x, y) with x covered by y, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;

    bool is_antichain() const;

    friend bool operator==(const Poset&, const Poset&) = default;

private:
    friend Poset make_poset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& relations);
    friend Poset induced_poset(const Poset& p, ElementSet s);

    std::vector<ElementSet> below_;
    std::vector<ElementSet> above_;
};

/// Transitive closure of the given relations (low < high).
/// Throws PosetError on out-of-range indices, self-loops or cycles.
Poset make_poset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& relations);

Poset make_antichain(std::size_t n);
/// 0 < 1 < ... < n-1
Poset make_chain(std::size_t n);
/// Root 0 below n pairwise incomparable elements 1..n; n+1 elements in total.
Poset make_shrub(std::size_t n);

/// Restriction of the order to s, with the members of s renumbered 0..|s|-1
/// in increasing index order.
Poset induced_poset(const Poset& p, ElementSet s);

/// Injective map element -> positive integer.
using Labeling = std::vector<unsigned>;

/// A poset together with an injective labeling of its elements.
class LabeledPoset {
public:
    LabeledPoset() = default;
    /// Throws PosetError if the labeling has the wrong length, is not
    /// injective or uses the label 0.
    LabeledPoset(Poset poset, Labeling omega);

    const Poset& poset() const noexcept { return poset_; }
    const Labeling& omega() const noexcept { return omega_; }
    std::size_t size() const noexcept { return poset_.size(); }

    /// Elements y with x < y but omega(x) > omega(y).
    ElementSet descents_above(std::size_t x) const { return conflicts_[x]; }

    friend bool operator==(const LabeledPoset& a, const LabeledPoset& b)
    {
        return a.poset_ == b.poset_ && a.omega_ == b.omega_;
    }

private:
    Poset poset_;
    Labeling omega_;
    std::vector<ElementSet> conflicts_;
};

/// Topological order, smallest available index first.
std::vector<std::size_t> linear_extension(const Poset& p);
/// Uniformly chosen available element at each step (not a uniform extension).
std::vector<std::size_t> random_linear_extension(const Poset& p, std::mt19937_64& rng);

/// Labels 1..n along the linear extension (order-preserving) or n..1
/// (order-reversing).
Labeling labeling_from_extension(std::size_t n, const std::vector<std::size_t>& order, bool reversed);

Labeling natural_labeling(const Poset& p);
Labeling reversed_labeling(const Poset& p);
Labeling random_labeling(std::size_t n, std::mt19937_64& rng);

/// omega restricted to s is order-preserving.
bool is_omega_natural(const LabeledPoset& lp, ElementSet s);
/// Every subset is omega-natural.
bool is_naturally_labeled(const LabeledPoset& lp);

/// All order ideals sorted by (cardinality, bit pattern); front() is the
/// empty set and back() the whole poset.
std::vector<ElementSet> enumerate_ideals(const Poset& p);
std::vector<ElementSet> omega_natural_ideals(const LabeledPoset& lp);

ElementSet minimum_elements(const Poset& p);
bool is_ideal(const Poset& p, ElementSet s);

/// Induced labeled sub-poset on s, canonicalized.
LabeledPoset induced_subposet(const LabeledPoset& lp, ElementSet s);

/// Relabel to 1..n keeping the relative label order.
LabeledPoset canonicalize(const LabeledPoset& lp);

/// Complete invariant of the labeled-poset equivalence class.
std::string labeled_key(const LabeledPoset& lp);

/// Isomorphism key for unlabeled posets: equal keys imply isomorphic posets.
/// Exact (isomorphic posets share a key) whenever the lex-min search fits in
/// the permutation budget, which covers every poset up to 7 elements.
std::string unlabeled_key(const Poset& p);

} // namespace orderpoly

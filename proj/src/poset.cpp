#include "orderpoly/poset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace orderpoly {

std::vector<std::size_t> ElementSet::members() const
{
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    }
    return out;
}

std::string ElementSet::to_string() const
{
    std::string s = "{";
    bool first = true;
    for (auto x : members()) {
        if (!first) {
            s += ",";
        }
        first = false;
        s += std::to_string(x);
    }
    return s + "}";
}

Poset make_poset(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& relations)
{
    if (n > kMaxElements) {
        throw PosetError("poset has " + std::to_string(n) + " elements; at most "
                         + std::to_string(kMaxElements) + " are supported");
    }
    std::vector<ElementSet> above(n);
    for (const auto& [lo, hi] : relations) {
        if (lo >= n || hi >= n) {
            throw PosetError("relation " + std::to_string(lo) + " < " + std::to_string(hi)
                             + " refers to an element outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
        }
        if (lo == hi) {
            throw PosetError("relation " + std::to_string(lo) + " < " + std::to_string(hi)
                             + " is reflexive");
        }
        above[lo] = above[lo] | ElementSet::singleton(hi);
    }
    // Warshall-style closure on bitsets.
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (above[i].contains(k)) {
                above[i] = above[i] | above[k];
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (above[i].contains(i)) {
            throw PosetError("relations contain a cycle through element " + std::to_string(i));
        }
    }
    Poset p;
    p.above_ = above;
    p.below_.assign(n, ElementSet{});
    for (std::size_t i = 0; i < n; ++i) {
        for (auto j : above[i].members()) {
            p.below_[j] = p.below_[j] | ElementSet::singleton(i);
        }
    }
    return p;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covers() const
{
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < size(); ++x) {
        for (auto y : above_[x].members()) {
            // y covers x iff nothing strictly between
            if ((above_[x] & below_[y]).empty()) {
                out.emplace_back(x, y);
            }
        }
    }
    return out;
}

bool Poset::is_antichain() const
{
    return std::all_of(above_.begin(), above_.end(), [](ElementSet s) { return s.empty(); });
}

Poset make_antichain(std::size_t n)
{
    return make_poset(n, {});
}

Poset make_chain(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        rel.emplace_back(i, i + 1);
    }
    return make_poset(n, rel);
}

Poset make_shrub(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 1; i <= n; ++i) {
        rel.emplace_back(0, i);
    }
    return make_poset(n + 1, rel);
}

Poset induced_poset(const Poset& p, ElementSet s)
{
    const auto members = s.members();
    std::vector<std::size_t> index(p.size(), 0);
    for (std::size_t i = 0; i < members.size(); ++i) {
        index[members[i]] = i;
    }
    Poset q;
    q.above_.assign(members.size(), ElementSet{});
    q.below_.assign(members.size(), ElementSet{});
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (auto y : (p.above(members[i]) & s).members()) {
            q.above_[i] = q.above_[i] | ElementSet::singleton(index[y]);
            q.below_[index[y]] = q.below_[index[y]] | ElementSet::singleton(i);
        }
    }
    return q;
}

LabeledPoset::LabeledPoset(Poset poset, Labeling omega) : poset_(std::move(poset)), omega_(std::move(omega))
{
    if (omega_.size() != poset_.size()) {
        throw PosetError("labeling has " + std::to_string(omega_.size()) + " labels for "
                         + std::to_string(poset_.size()) + " elements");
    }
    std::vector<unsigned> sorted = omega_;
    std::sort(sorted.begin(), sorted.end());
    if (!sorted.empty() && sorted.front() == 0) {
        throw PosetError("labels must be positive integers");
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw PosetError("labels must be pairwise distinct");
    }
    conflicts_.assign(poset_.size(), ElementSet{});
    for (std::size_t x = 0; x < poset_.size(); ++x) {
        for (auto y : poset_.above(x).members()) {
            if (omega_[x] > omega_[y]) {
                conflicts_[x] = conflicts_[x] | ElementSet::singleton(y);
            }
        }
    }
}

std::vector<std::size_t> linear_extension(const Poset& p)
{
    std::vector<std::size_t> order;
    ElementSet placed;
    while (order.size() < p.size()) {
        for (std::size_t x = 0; x < p.size(); ++x) {
            if (!placed.contains(x) && p.below(x).is_subset_of(placed)) {
                order.push_back(x);
                placed = placed | ElementSet::singleton(x);
                break;
            }
        }
    }
    return order;
}

std::vector<std::size_t> random_linear_extension(const Poset& p, std::mt19937_64& rng)
{
    std::vector<std::size_t> order;
    ElementSet placed;
    while (order.size() < p.size()) {
        std::vector<std::size_t> available;
        for (std::size_t x = 0; x < p.size(); ++x) {
            if (!placed.contains(x) && p.below(x).is_subset_of(placed)) {
                available.push_back(x);
            }
        }
        std::uniform_int_distribution<std::size_t> pick(0, available.size() - 1);
        const std::size_t x = available[pick(rng)];
        order.push_back(x);
        placed = placed | ElementSet::singleton(x);
    }
    return order;
}

Labeling labeling_from_extension(std::size_t n, const std::vector<std::size_t>& order, bool reversed)
{
    Labeling omega(n);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        omega[order[pos]] = static_cast<unsigned>(reversed ? n - pos : pos + 1);
    }
    return omega;
}

Labeling natural_labeling(const Poset& p)
{
    return labeling_from_extension(p.size(), linear_extension(p), false);
}

Labeling reversed_labeling(const Poset& p)
{
    return labeling_from_extension(p.size(), linear_extension(p), true);
}

Labeling random_labeling(std::size_t n, std::mt19937_64& rng)
{
    Labeling omega(n);
    std::iota(omega.begin(), omega.end(), 1U);
    std::shuffle(omega.begin(), omega.end(), rng);
    return omega;
}

bool is_omega_natural(const LabeledPoset& lp, ElementSet s)
{
    for (auto x : s.members()) {
        if (!(lp.descents_above(x) & s).empty()) {
            return false;
        }
    }
    return true;
}

bool is_naturally_labeled(const LabeledPoset& lp)
{
    return is_omega_natural(lp, lp.poset().elements());
}

bool is_ideal(const Poset& p, ElementSet s)
{
    for (auto x : s.members()) {
        if (!p.below(x).is_subset_of(s)) {
            return false;
        }
    }
    return true;
}

std::vector<ElementSet> enumerate_ideals(const Poset& p)
{
    // Breadth-first closure: every nonempty ideal is a smaller ideal plus one
    // minimal element of the complement.
    std::vector<ElementSet> ideals{ElementSet{}};
    std::unordered_set<std::uint64_t> seen{0};
    for (std::size_t head = 0; head < ideals.size(); ++head) {
        const ElementSet current = ideals[head];
        for (std::size_t x = 0; x < p.size(); ++x) {
            if (current.contains(x) || !p.below(x).is_subset_of(current)) {
                continue;
            }
            const ElementSet next = current | ElementSet::singleton(x);
            if (seen.insert(next.bits()).second) {
                ideals.push_back(next);
            }
        }
    }
    std::sort(ideals.begin(), ideals.end(), [](ElementSet a, ElementSet b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a.bits() < b.bits();
    });
    return ideals;
}

std::vector<ElementSet> omega_natural_ideals(const LabeledPoset& lp)
{
    std::vector<ElementSet> out;
    for (auto s : enumerate_ideals(lp.poset())) {
        if (is_omega_natural(lp, s)) {
            out.push_back(s);
        }
    }
    return out;
}

ElementSet minimum_elements(const Poset& p)
{
    ElementSet out;
    for (std::size_t x = 0; x < p.size(); ++x) {
        if (p.below(x).empty()) {
            out = out | ElementSet::singleton(x);
        }
    }
    return out;
}

namespace {

Labeling rank_labels(const Labeling& omega)
{
    std::vector<std::size_t> idx(omega.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return omega[a] < omega[b]; });
    Labeling out(omega.size());
    for (std::size_t r = 0; r < idx.size(); ++r) {
        out[idx[r]] = static_cast<unsigned>(r + 1);
    }
    return out;
}

std::string relation_key(const Poset& p, const std::vector<std::size_t>& order)
{
    const std::size_t n = order.size();
    std::string key(1 + n * n, '0');
    key[0] = static_cast<char>(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (p.less(order[i], order[j])) {
                key[1 + i * n + j] = '1';
            }
        }
    }
    return key;
}

} // namespace

LabeledPoset induced_subposet(const LabeledPoset& lp, ElementSet s)
{
    Labeling omega;
    for (auto x : s.members()) {
        omega.push_back(lp.omega()[x]);
    }
    return LabeledPoset(induced_poset(lp.poset(), s), rank_labels(omega));
}

LabeledPoset canonicalize(const LabeledPoset& lp)
{
    return LabeledPoset(lp.poset(), rank_labels(lp.omega()));
}

std::string labeled_key(const LabeledPoset& lp)
{
    // With labels collapsed to 1..n, an equivalence must match labels
    // exactly, so listing elements by label gives a complete invariant.
    std::vector<std::size_t> order(lp.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return lp.omega()[a] < lp.omega()[b]; });
    return relation_key(lp.poset(), order);
}

std::string unlabeled_key(const Poset& p)
{
    constexpr double kPermutationBudget = 50000;
    const std::size_t n = p.size();
    std::vector<std::pair<std::size_t, std::size_t>> invariant(n);
    for (std::size_t x = 0; x < n; ++x) {
        invariant[x] = {p.below(x).size(), p.above(x).size()};
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return invariant[a] < invariant[b]; });

    // Blocks of equal invariant; isomorphisms permute within blocks.
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    double budget = 1;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && invariant[order[j]] == invariant[order[i]]) {
            ++j;
        }
        blocks.emplace_back(i, j);
        for (std::size_t k = 2; k <= j - i; ++k) {
            budget *= static_cast<double>(k);
        }
        i = j;
    }
    if (budget > kPermutationBudget) {
        return relation_key(p, order);
    }
    std::string best = relation_key(p, order);
    // Odometer over the per-block permutations.
    std::vector<std::size_t> current = order;
    for (auto& [b, e] : blocks) {
        std::sort(current.begin() + static_cast<long>(b), current.begin() + static_cast<long>(e));
    }
    while (true) {
        best = std::min(best, relation_key(p, current));
        std::size_t bi = blocks.size();
        bool advanced = false;
        while (bi-- > 0) {
            auto [b, e] = blocks[bi];
            if (std::next_permutation(current.begin() + static_cast<long>(b),
                                      current.begin() + static_cast<long>(e))) {
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            break;
        }
    }
    return best;
}

} // namespace orderpoly

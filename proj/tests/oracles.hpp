#pragma once

// Independent reference computations used only by the tests. None of these
// share code paths with the library routines they are compared against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include <gmpxx.h>

#include "orderpoly/poset.hpp"
#include "orderpoly/unipoly.hpp"

namespace oracle {

using orderpoly::ElementSet;
using orderpoly::LabeledPoset;
using orderpoly::Poset;
using orderpoly::Rational;
using orderpoly::UniPoly;

/// Order ideals by filtering all 2^n subsets.
inline std::vector<ElementSet> ideals_by_filter(const Poset& p)
{
    std::vector<ElementSet> out;
    const std::size_t n = p.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        bool closed = true;
        for (std::size_t y = 0; y < n && closed; ++y) {
            if (!((bits >> y) & 1U)) {
                continue;
            }
            for (std::size_t x = 0; x < n; ++x) {
                if (p.less(x, y) && !((bits >> x) & 1U)) {
                    closed = false;
                    break;
                }
            }
        }
        if (closed) {
            out.emplace_back(bits);
        }
    }
    return out;
}

/// Subset on which the labels are order-preserving, checked pair by pair.
inline bool labels_preserve_order(const LabeledPoset& lp, std::uint64_t bits)
{
    for (std::size_t x = 0; x < lp.size(); ++x) {
        for (std::size_t y = 0; y < lp.size(); ++y) {
            if (((bits >> x) & 1U) && ((bits >> y) & 1U) && lp.poset().less(x, y) && lp.omega()[x] > lp.omega()[y]) {
                return false;
            }
        }
    }
    return true;
}

/// Paths from the empty ideal to the whole poset with k arcs, by depth-first
/// search over subset pairs.
inline std::vector<mpz_class> path_counts_by_search(const LabeledPoset& lp)
{
    const auto ideals = ideals_by_filter(lp.poset());
    const std::uint64_t full = (std::uint64_t{1} << lp.size()) - 1;
    std::vector<mpz_class> counts(lp.size() + 1);
    std::function<void(std::uint64_t, std::size_t)> walk = [&](std::uint64_t at, std::size_t steps) {
        if (at == full) {
            counts[steps] += 1;
            return;
        }
        for (ElementSet next : ideals) {
            const std::uint64_t b = next.bits();
            if ((at & ~b) == 0 && b != at && labels_preserve_order(lp, b & ~at)) {
                walk(b, steps + 1);
            }
        }
    };
    walk(0, 0);
    return counts;
}

/// Number of linear extensions by testing every permutation.
inline std::uint64_t linear_extensions_by_permutation(const Poset& p)
{
    std::vector<std::size_t> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < order.size() && ok; ++i) {
            for (std::size_t j = i + 1; j < order.size(); ++j) {
                if (p.less(order[j], order[i])) {
                    ok = false;
                    break;
                }
            }
        }
        count += ok ? 1 : 0;
    } while (std::next_permutation(order.begin(), order.end()));
    return count;
}

/// sum over permutations of [n] of lambda^(1 + descents).
inline UniPoly eulerian_by_descents(unsigned n)
{
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0U);
    std::vector<Rational> coeffs(n + 1);
    do {
        unsigned des = 0;
        for (unsigned i = 0; i + 1 < n; ++i) {
            des += perm[i] > perm[i + 1] ? 1 : 0;
        }
        coeffs[1 + des] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return UniPoly(coeffs, "lambda");
}

/// Bernoulli numbers with B_1 = -1/2 via the Akiyama-Tanigawa triangle.
inline std::vector<Rational> bernoulli_akiyama_tanigawa(unsigned max_n)
{
    std::vector<Rational> out;
    std::vector<Rational> a(max_n + 1);
    for (unsigned m = 0; m <= max_n; ++m) {
        a[m] = Rational(1, m + 1);
        a[m].canonicalize();
        for (unsigned j = m; j >= 1; --j) {
            a[j - 1] = Rational(j) * (a[j - 1] - a[j]);
        }
        out.push_back(a[0]);
    }
    // the triangle produces B_1 = +1/2
    if (max_n >= 1) {
        out[1] = -out[1];
    }
    return out;
}

/// omega-order-preserving maps into [n]: order-preserving, and strict on
/// every pair x < y with omega(x) > omega(y).
inline mpz_class count_maps(const LabeledPoset& lp, unsigned n)
{
    const std::size_t size = lp.size();
    std::vector<unsigned> f(size, 1);
    mpz_class count = 0;
    if (n == 0) {
        return size == 0 ? 1 : 0;
    }
    while (true) {
        bool ok = true;
        for (std::size_t x = 0; x < size && ok; ++x) {
            for (std::size_t y = 0; y < size; ++y) {
                if (!lp.poset().less(x, y)) {
                    continue;
                }
                const bool strict = lp.omega()[x] > lp.omega()[y];
                if (f[x] > f[y] || (strict && f[x] == f[y])) {
                    ok = false;
                    break;
                }
            }
        }
        count += ok ? 1 : 0;
        std::size_t i = 0;
        while (i < size && f[i] == n) {
            f[i++] = 1;
        }
        if (i == size) {
            break;
        }
        ++f[i];
    }
    return count;
}

} // namespace oracle

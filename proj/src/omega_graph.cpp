#include "orderpoly/omega_graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orderpoly {

OmegaGraph::OmegaGraph(std::vector<ElementSet> ideals, std::vector<std::vector<std::uint32_t>> out,
                       std::size_t poset_size)
    : ideals_(std::move(ideals)), out_(std::move(out)), poset_size_(poset_size)
{
    for (const auto& succ : out_) {
        arc_count_ += succ.size();
    }
}

bool OmegaGraph::has_arc(std::size_t i, std::size_t j) const
{
    const auto& succ = out_[i];
    return std::binary_search(succ.begin(), succ.end(), static_cast<std::uint32_t>(j));
}

std::size_t OmegaGraph::index_of(ElementSet s) const
{
    auto it = std::lower_bound(ideals_.begin(), ideals_.end(), s, [](ElementSet a, ElementSet b) {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a.bits() < b.bits();
    });
    if (it == ideals_.end() || *it != s) {
        throw std::out_of_range("not an ideal: " + s.to_string());
    }
    return static_cast<std::size_t>(it - ideals_.begin());
}

RatMatrix OmegaGraph::adjacency() const
{
    RatMatrix a(vertex_count());
    for (std::size_t i = 0; i < vertex_count(); ++i) {
        for (auto j : out_[i]) {
            a(i, j) = 1;
        }
    }
    return a;
}

Digraph OmegaGraph::open_graph() const
{
    Digraph g;
    if (vertex_count() <= 2) {
        return g;
    }
    g.vertex_count = vertex_count() - 2;
    g.out.resize(g.vertex_count);
    for (std::size_t i = 1; i + 1 < vertex_count(); ++i) {
        for (auto j : out_[i]) {
            if (j != sink()) {
                g.out[i - 1].push_back(j - 1);
            }
        }
    }
    return g;
}

std::string OmegaGraph::to_dot() const
{
    std::ostringstream os;
    os << "digraph omega {\n";
    for (std::size_t i = 0; i < vertex_count(); ++i) {
        os << "  v" << i << " [label=\"" << ideals_[i].to_string() << "\"];\n";
    }
    for (std::size_t i = 0; i < vertex_count(); ++i) {
        for (auto j : out_[i]) {
            os << "  v" << i << " -> v" << j << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

OmegaGraph build_omega_graph(const LabeledPoset& lp)
{
    auto ideals = enumerate_ideals(lp.poset());
    std::vector<std::vector<std::uint32_t>> out(ideals.size());
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        for (std::size_t j = i + 1; j < ideals.size(); ++j) {
            if (!ideals[i].is_subset_of(ideals[j])) {
                continue;
            }
            if (is_omega_natural(lp, ideals[j] - ideals[i])) {
                out[i].push_back(static_cast<std::uint32_t>(j));
            }
        }
    }
    return OmegaGraph(std::move(ideals), std::move(out), lp.size());
}

Integer PathCounts::multipaths(unsigned n) const
{
    Integer total = 0;
    for (unsigned k = 0; k < c.size() && k <= n; ++k) {
        total += binomial(n, k) * c[k];
    }
    return total;
}

PathCounts count_paths(const OmegaGraph& g)
{
    const std::size_t p = g.poset_size();
    const std::size_t v = g.vertex_count();
    // ways[i][k]: paths from the source to i with k arcs
    std::vector<std::vector<Integer>> ways(v, std::vector<Integer>(p + 1));
    ways[g.source()][0] = 1;
    for (std::size_t i = 0; i < v; ++i) {
        for (auto j : g.successors(i)) {
            for (std::size_t k = 0; k < p; ++k) {
                if (ways[i][k] != 0) {
                    ways[j][k + 1] += ways[i][k];
                }
            }
        }
    }
    return PathCounts{ways[g.sink()]};
}

Integer multipath_count_matrix(const OmegaGraph& g, unsigned n)
{
    std::vector<Integer> row(g.vertex_count());
    row[g.source()] = 1;
    for (unsigned step = 0; step < n; ++step) {
        std::vector<Integer> next = row; // the identity part of I + A
        for (std::size_t i = 0; i < g.vertex_count(); ++i) {
            if (row[i] == 0) {
                continue;
            }
            for (auto j : g.successors(i)) {
                next[j] += row[i];
            }
        }
        row = std::move(next);
    }
    return row[g.sink()];
}

namespace {

std::vector<std::size_t> topological_order(const Digraph& g)
{
    std::vector<std::size_t> indegree(g.vertex_count, 0);
    for (const auto& succ : g.out) {
        for (auto j : succ) {
            ++indegree[j];
        }
    }
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < g.vertex_count; ++i) {
        if (indegree[i] == 0) {
            order.push_back(i);
        }
    }
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (auto j : g.out[order[head]]) {
            if (--indegree[j] == 0) {
                order.push_back(j);
            }
        }
    }
    if (order.size() != g.vertex_count) {
        throw std::invalid_argument("chain_polynomial: graph has a directed cycle");
    }
    return order;
}

// ends[i][k]: weighted chains of k vertices ending at i
UniPoly weighted_chains(const Digraph& g, const std::vector<Integer>& start_weight,
                        const std::vector<Integer>& end_weight, const Integer& empty_weight)
{
    const std::size_t n = g.vertex_count;
    std::vector<std::vector<Integer>> ends(n, std::vector<Integer>(n + 1));
    std::vector<Rational> coeffs(n + 1);
    coeffs[0] = empty_weight;
    for (auto i : topological_order(g)) {
        ends[i][1] += start_weight[i];
        for (std::size_t k = 1; k <= n; ++k) {
            if (ends[i][k] == 0) {
                continue;
            }
            coeffs[k] += ends[i][k] * end_weight[i];
            if (k < n) {
                for (auto j : g.out[i]) {
                    ends[j][k + 1] += ends[i][k];
                }
            }
        }
    }
    return UniPoly(std::move(coeffs), "mu");
}

} // namespace

UniPoly chain_polynomial(const Digraph& g)
{
    return weighted_chains(g, std::vector<Integer>(g.vertex_count, 1),
                           std::vector<Integer>(g.vertex_count, 1), 1);
}

UniPoly anchored_chain_polynomial(const OmegaGraph& g)
{
    const Digraph open = g.open_graph();
    std::vector<Integer> start(open.vertex_count), end(open.vertex_count);
    for (std::size_t i = 0; i < open.vertex_count; ++i) {
        start[i] = g.has_arc(g.source(), i + 1) ? 1 : 0;
        end[i] = g.has_arc(i + 1, g.sink()) ? 1 : 0;
    }
    const Integer empty = g.vertex_count() >= 2 && g.has_arc(g.source(), g.sink()) ? 1 : 0;
    return weighted_chains(open, start, end, empty);
}

} // namespace orderpoly

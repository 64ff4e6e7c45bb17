#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "orderpoly/matrix.hpp"
#include "orderpoly/poset.hpp"
#include "orderpoly/rational.hpp"
#include "orderpoly/unipoly.hpp"

namespace orderpoly {

/// Plain directed graph on vertices 0..vertex_count-1.
struct Digraph {
    std::size_t vertex_count = 0;
    std::vector<std::vector<std::uint32_t>> out;
};

/// The omega-graph of a labeled poset: vertices are the order ideals (in
/// enumerate_ideals order), with an arc I -> J whenever I is a proper subset
/// of J and J \ I is omega-natural. Arcs point from the smaller ideal to the
/// larger one, so directed paths run from the empty ideal to the whole poset
/// and the adjacency matrix is strictly upper triangular.
class OmegaGraph {
public:
    OmegaGraph() = default;
    OmegaGraph(std::vector<ElementSet> ideals, std::vector<std::vector<std::uint32_t>> out,
               std::size_t poset_size);

    const std::vector<ElementSet>& ideals() const noexcept { return ideals_; }
    std::size_t vertex_count() const noexcept { return ideals_.size(); }
    std::size_t arc_count() const noexcept { return arc_count_; }
    std::size_t poset_size() const noexcept { return poset_size_; }
    std::size_t source() const noexcept { return 0; }
    std::size_t sink() const noexcept { return ideals_.size() - 1; }

    /// Successors of vertex i, ascending.
    const std::vector<std::uint32_t>& successors(std::size_t i) const { return out_[i]; }
    bool has_arc(std::size_t i, std::size_t j) const;

    /// Index of an ideal; throws std::out_of_range if s is not an ideal.
    std::size_t index_of(ElementSet s) const;

    /// 0/1 adjacency matrix A(P, omega). Dense: meant for small lattices.
    RatMatrix adjacency() const;

    /// The graph with the empty ideal and the whole poset removed. Vertex i
    /// of the result is ideal i+1.
    Digraph open_graph() const;

    std::string to_dot() const;

private:
    std::vector<ElementSet> ideals_;
    std::vector<std::vector<std::uint32_t>> out_;
    std::size_t arc_count_ = 0;
    std::size_t poset_size_ = 0;
};

OmegaGraph build_omega_graph(const LabeledPoset& lp);

/// Directed path counts from the empty ideal to the whole poset.
struct PathCounts {
    /// c[k] = number of paths with k arcs, k = 0..|P|.
    std::vector<Integer> c;

    /// Multi-paths of length n via a_n = sum_k binom(n, k) c_k.
    Integer multipaths(unsigned n) const;
};

/// Dynamic programming over (vertex, length) in topological order.
PathCounts count_paths(const OmegaGraph& g);

/// Entry (empty, P) of (I + A)^n, by propagating a row vector.
Integer multipath_count_matrix(const OmegaGraph& g, unsigned n);

/// c(G; mu) = sum_k c_k mu^k where c_0 = 1 and c_k (k >= 1) counts directed
/// chains of G that visit k vertices. G must be acyclic
/// (throws std::invalid_argument otherwise).
UniPoly chain_polynomial(const Digraph& g);

/// Chain polynomial of the open omega-graph restricted to chains that extend
/// to paths from the empty ideal to P: c_k counts chains of k interior
/// vertices whose first vertex is entered from the empty ideal and whose last
/// vertex has an arc to P, and c_0 = 1 exactly when the arc (empty, P) exists.
/// Coincides with chain_polynomial(g.open_graph()) for naturally labeled
/// posets.
UniPoly anchored_chain_polynomial(const OmegaGraph& g);

} // namespace orderpoly

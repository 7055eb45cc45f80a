#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pfactor/errors.hpp"
#include "pfactor/vertex_set.hpp"

namespace pfactor {

/// Unordered vertex pair, stored with u < v.
struct Edge {
    std::uint32_t u = 0;
    std::uint32_t v = 0;

    Edge() = default;
    Edge(std::size_t a, std::size_t b)
        : u(static_cast<std::uint32_t>(a < b ? a : b)), v(static_cast<std::uint32_t>(a < b ? b : a)) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free edge list.
using EdgeSet = std::vector<Edge>;

/// Ordered vertex classes; see validate_partition.
using PartitionClasses = std::vector<VertexSet>;

/// Simple undirected graph on vertices 0..n-1 with bit-set adjacency rows.
/// Immutable once built; use Graph::Builder or the free constructors.
class Graph {
public:
    class Builder;

    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(std::size_t n);
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const { return n_; }
    std::size_t edge_count() const;
    const VertexSet& neighbors(std::size_t v) const { return adj_[v]; }
    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].contains(v); }
    std::size_t degree(std::size_t v) const { return adj_[v].size(); }
    VertexSet vertices() const { return VertexSet::range(n_); }
    /// All edges in lexicographic (u, v) order.
    EdgeSet edges() const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    friend class Builder;

    std::size_t n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

class Graph::Builder {
public:
    explicit Builder(std::size_t n);
    explicit Builder(Graph start) : graph_(std::move(start)) {}
    /// Adds uv; loops are rejected, repeated edges are idempotent.
    Builder& add_edge(std::size_t u, std::size_t v);
    Builder& remove_edge(std::size_t u, std::size_t v);
    bool has_edge(std::size_t u, std::size_t v) const;
    Graph build() const { return graph_; }

private:
    Graph graph_;
};

/// Uncapped adjacency-list graph; used for matching gadgets and large dense checks.
class AdjacencyList {
public:
    AdjacencyList() = default;
    explicit AdjacencyList(std::size_t n) : nbrs_(n) {}
    explicit AdjacencyList(const Graph& g);

    std::size_t order() const { return nbrs_.size(); }
    std::size_t edge_count() const;
    /// Caller guarantees the edge is new and u != v.
    void add_edge(std::size_t u, std::size_t v);
    const std::vector<std::uint32_t>& neighbors(std::size_t v) const { return nbrs_[v]; }

private:
    std::vector<std::vector<std::uint32_t>> nbrs_;
};

void check_capacity(std::size_t n);

Graph complete(std::size_t n);
Graph disjoint_union(const Graph& g, const Graph& h);
/// Disjoint union plus every edge between the two sides.
Graph join(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

/// Connected components ordered by least vertex.
std::vector<VertexSet> components(const Graph& g);
/// Components of the subgraph induced by `within`.
std::vector<VertexSet> components(const Graph& g, const VertexSet& within);
bool is_connected(const Graph& g);

std::size_t e_within(const Graph& g, const VertexSet& s);
/// Edges with one end in s and the other in t; s and t must be disjoint.
std::size_t e_between(const Graph& g, const VertexSet& s, const VertexSet& t);
inline std::size_t degree(const Graph& g, std::size_t v) { return g.degree(v); }
/// d_{G-S}(v).
std::size_t degree_in_deleted(const Graph& g, const VertexSet& s, std::size_t v);
/// 0 for the empty graph.
std::size_t min_degree(const Graph& g);

/// Throws std::invalid_argument unless the classes are non-empty, disjoint and cover V(G).
void validate_partition(const Graph& g, const PartitionClasses& classes);

}  // namespace pfactor

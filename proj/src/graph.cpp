#include "pfactor/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pfactor {

void check_capacity(std::size_t n) {
    if (n > kMaxVertices)
        throw CapacityError("graph with " + std::to_string(n) + " vertices exceeds the cap of " +
                            std::to_string(kMaxVertices));
}

Graph::Builder::Builder(std::size_t n) : graph_(n) {}

Graph::Builder& Graph::Builder::add_edge(std::size_t u, std::size_t v) {
    if (u >= graph_.n_ || v >= graph_.n_) throw std::out_of_range("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    graph_.adj_[u].insert(v);
    graph_.adj_[v].insert(u);
    return *this;
}

Graph::Builder& Graph::Builder::remove_edge(std::size_t u, std::size_t v) {
    if (u >= graph_.n_ || v >= graph_.n_) throw std::out_of_range("edge endpoint out of range");
    graph_.adj_[u].erase(v);
    graph_.adj_[v].erase(u);
    return *this;
}

bool Graph::Builder::has_edge(std::size_t u, std::size_t v) const { return graph_.adjacent(u, v); }

Graph::Graph(std::size_t n) : n_(n) { check_capacity(n); }

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) {
        if (e.v >= n) throw std::out_of_range("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
        adj_[e.u].insert(e.v);
        adj_[e.v].insert(e.u);
    }
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (std::size_t v = 0; v < n_; ++v) twice += adj_[v].size();
    return twice / 2;
}

EdgeSet Graph::edges() const {
    EdgeSet out;
    for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (std::size_t v = 0; v < a.n_; ++v)
        if (a.adj_[v] != b.adj_[v]) return false;
    return true;
}

AdjacencyList::AdjacencyList(const Graph& g) : nbrs_(g.order()) {
    for (std::size_t v = 0; v < g.order(); ++v)
        for (std::size_t u : g.neighbors(v)) nbrs_[v].push_back(static_cast<std::uint32_t>(u));
}

std::size_t AdjacencyList::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : nbrs_) twice += row.size();
    return twice / 2;
}

void AdjacencyList::add_edge(std::size_t u, std::size_t v) {
    nbrs_[u].push_back(static_cast<std::uint32_t>(v));
    nbrs_[v].push_back(static_cast<std::uint32_t>(u));
}

Graph complete(std::size_t n) {
    check_capacity(n);
    Graph::Builder b(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

namespace {

Graph combine(const Graph& g, const Graph& h, bool cross) {
    const std::size_t ng = g.order();
    const std::size_t n = ng + h.order();
    check_capacity(n);
    Graph::Builder b(n);
    for (const Edge& e : g.edges()) b.add_edge(e.u, e.v);
    for (const Edge& e : h.edges()) b.add_edge(ng + e.u, ng + e.v);
    if (cross)
        for (std::size_t u = 0; u < ng; ++u)
            for (std::size_t v = ng; v < n; ++v) b.add_edge(u, v);
    return b.build();
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) { return combine(g, h, false); }

Graph join(const Graph& g, const Graph& h) { return combine(g, h, true); }

Graph complement(const Graph& g) {
    const std::size_t n = g.order();
    Graph::Builder b(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) b.add_edge(u, v);
    return b.build();
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& within) {
    std::vector<VertexSet> out;
    VertexSet remaining = within;
    while (!remaining.empty()) {
        VertexSet comp;
        VertexSet frontier;
        frontier.insert(remaining.lowest());
        while (!frontier.empty()) {
            comp |= frontier;
            VertexSet next;
            for (std::size_t v : frontier) next |= g.neighbors(v);
            next &= within;
            next -= comp;
            frontier = next;
        }
        remaining -= comp;
        out.push_back(comp);
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::size_t e_within(const Graph& g, const VertexSet& s) {
    std::size_t twice = 0;
    for (std::size_t v : s) twice += (g.neighbors(v) & s).size();
    return twice / 2;
}

std::size_t e_between(const Graph& g, const VertexSet& s, const VertexSet& t) {
    if (s.intersects(t)) throw std::invalid_argument("e_between requires disjoint sets");
    std::size_t count = 0;
    for (std::size_t v : s) count += (g.neighbors(v) & t).size();
    return count;
}

std::size_t degree_in_deleted(const Graph& g, const VertexSet& s, std::size_t v) {
    return (g.neighbors(v) - s).size();
}

std::size_t min_degree(const Graph& g) {
    if (g.order() == 0) return 0;
    std::size_t best = g.order();
    for (std::size_t v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

void validate_partition(const Graph& g, const PartitionClasses& classes) {
    VertexSet seen;
    for (const VertexSet& c : classes) {
        if (c.empty()) throw std::invalid_argument("partition has an empty class");
        if (c.intersects(seen)) throw std::invalid_argument("partition classes overlap");
        seen |= c;
    }
    if (seen != g.vertices()) throw std::invalid_argument("partition does not cover the vertex set");
}

}  // namespace pfactor

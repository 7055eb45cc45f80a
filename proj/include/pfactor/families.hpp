#pragma once

#include <cstddef>
#include <span>

#include "pfactor/graph.hpp"

namespace pfactor {

Graph empty_graph(std::size_t n);
Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph star(std::size_t leaves);
Graph complete_bipartite(std::size_t s, std::size_t t);
Graph petersen();

/// H_{n,a} = K_{a-1} join (K_1 union K_{n-a}).
/// Vertex layout: 0..a-2 the clique K_{a-1}, a-1 the isolated K_1 vertex, a..n-1 the K_{n-a}.
/// Requires a >= 1 and n >= a + 1.
Graph h_extremal(std::size_t n, std::size_t a);

/// Index of the K_1 vertex of h_extremal(n, a).
inline std::size_t h_extremal_pendant(std::size_t a) { return a - 1; }

/// K_s join (K_{n_1} union ... union K_{n_q}); the K_s occupies 0..s-1,
/// then each part in order. parts must be non-empty with positive entries.
Graph clique_join(std::size_t s, std::span<const std::size_t> parts);

/// L_{n,s} = K_s join (K_{n-s-3} union 3K_1); parts laid out as [n-s-3, 1, 1, 1].
Graph l_family(std::size_t n, std::size_t s);

/// Same construction as clique_join without the vertex cap.
AdjacencyList clique_join_adjacency(std::size_t s, std::span<const std::size_t> parts);

/// True iff g is isomorphic to H_{n,a} with n = |V(g)|. Candidates for the K_1
/// vertex are the vertices of degree a-1; each is checked against the full
/// canonical adjacency it implies.
bool recognize_h_extremal(const Graph& g, std::size_t a);

}  // namespace pfactor

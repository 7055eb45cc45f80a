#include "pfactor/families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace pfactor {

Graph empty_graph(std::size_t n) { return Graph(n); }

Graph cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph::Builder b(n);
    for (std::size_t v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    return b.build();
}

Graph path(std::size_t n) {
    Graph::Builder b(n);
    for (std::size_t v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

Graph star(std::size_t leaves) { return complete_bipartite(1, leaves); }

Graph complete_bipartite(std::size_t s, std::size_t t) { return join(Graph(s), Graph(t)); }

Graph petersen() {
    Graph::Builder b(10);
    for (std::size_t i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);          // outer cycle
        b.add_edge(i, i + 5);                // spokes
        b.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return b.build();
}

Graph h_extremal(std::size_t n, std::size_t a) {
    if (a < 1 || n < a + 1) throw std::invalid_argument("h_extremal requires a >= 1 and n >= a + 1");
    return join(complete(a - 1), disjoint_union(complete(1), complete(n - a)));
}

Graph clique_join(std::size_t s, std::span<const std::size_t> parts) {
    if (parts.empty()) throw std::invalid_argument("clique_join needs at least one part");
    std::size_t n = s;
    for (std::size_t p : parts) {
        if (p == 0) throw std::invalid_argument("clique_join parts must be positive");
        n += p;
    }
    check_capacity(n);
    Graph rest(0);
    for (std::size_t p : parts) rest = disjoint_union(rest, complete(p));
    return join(complete(s), rest);
}

Graph l_family(std::size_t n, std::size_t s) {
    if (n < s + 4) throw std::invalid_argument("l_family requires n >= s + 4");
    const std::vector<std::size_t> parts{n - s - 3, 1, 1, 1};
    return clique_join(s, parts);
}

AdjacencyList clique_join_adjacency(std::size_t s, std::span<const std::size_t> parts) {
    if (parts.empty()) throw std::invalid_argument("clique_join needs at least one part");
    const std::size_t n = s + std::accumulate(parts.begin(), parts.end(), std::size_t{0});
    AdjacencyList adj(n);
    for (std::size_t u = 0; u < s; ++u)
        for (std::size_t v = u + 1; v < n; ++v) adj.add_edge(u, v);
    std::size_t start = s;
    for (std::size_t p : parts) {
        if (p == 0) throw std::invalid_argument("clique_join parts must be positive");
        for (std::size_t u = start; u < start + p; ++u)
            for (std::size_t v = u + 1; v < start + p; ++v) adj.add_edge(u, v);
        start += p;
    }
    return adj;
}

bool recognize_h_extremal(const Graph& g, std::size_t a) {
    const std::size_t n = g.order();
    if (a < 1 || n < a + 1) return false;

    // Degree profile: {a-1} + {n-1}^(a-1) + {n-2}^(n-a).
    std::vector<std::size_t> expected;
    expected.push_back(a - 1);
    expected.insert(expected.end(), a - 1, n - 1);
    expected.insert(expected.end(), n - a, n - 2);
    std::vector<std::size_t> actual(n);
    for (std::size_t v = 0; v < n; ++v) actual[v] = g.degree(v);
    std::sort(expected.begin(), expected.end());
    std::vector<std::size_t> sorted = actual;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != expected) return false;

    const VertexSet all = g.vertices();
    for (std::size_t x = 0; x < n; ++x) {
        if (actual[x] != a - 1) continue;
        const VertexSet hub = g.neighbors(x);
        VertexSet rest = all - hub;
        rest.erase(x);
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) {
            VertexSet want;
            if (v == x) {
                want = hub;
            } else if (hub.contains(v)) {
                want = all;
                want.erase(v);
            } else {
                want = hub | rest;
                want.erase(v);
            }
            ok = g.neighbors(v) == want;
        }
        if (ok) return true;
    }
    return false;
}

}  // namespace pfactor

#include <doctest.h>

#include "oracles.hpp"
#include "pfactor/families.hpp"
#include "pfactor/matching.hpp"
#include "pfactor/random.hpp"

using namespace pfactor;

namespace {

bool is_matching(const Graph& g, const EdgeSet& m) {
    VertexSet used;
    for (const Edge& e : m) {
        if (!g.adjacent(e.u, e.v) || used.contains(e.u) || used.contains(e.v)) return false;
        used.insert(e.u);
        used.insert(e.v);
    }
    return true;
}

}  // namespace

TEST_CASE("spec examples") {
    CHECK(max_matching(cycle(6)).size() == 3);
    CHECK(max_matching(star(3)).size() == 1);
    const EdgeSet p = max_matching(petersen());
    CHECK(p.size() == 5);
    CHECK(is_matching(petersen(), p));
    CHECK(max_matching(Graph(0)).empty());
}

TEST_CASE("blossoms") {
    // Two triangles joined by a path: needs contraction to find the perfect matching.
    Graph::Builder b(8);
    b.add_edge(0, 1).add_edge(1, 2).add_edge(2, 0).add_edge(2, 3).add_edge(3, 4).add_edge(4, 5);
    b.add_edge(5, 6).add_edge(6, 7).add_edge(7, 5);
    CHECK(max_matching(b.build()).size() == 4);
    CHECK(max_matching(cycle(7)).size() == 3);
}

TEST_CASE("maximum size agrees with exhaustive recursion") {
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const std::size_t n = 1 + seed % 13;
        const Graph g = random_graph(n, 0.1 + 0.002 * static_cast<double>(seed), seed);
        const EdgeSet m = max_matching(g);
        CHECK(is_matching(g, m));
        CHECK(m.size() == oracle::max_matching_size(oracle::adjacency(g)));
        CHECK(max_matching(g) == m);  // deterministic
    }
}

TEST_CASE("perfect matching early exit") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const std::size_t n = 1 + seed % 12;
        const Graph g = random_graph(n, 0.3, seed);
        const auto mates = perfect_matching_mates(AdjacencyList(g));
        const bool perfect = 2 * oracle::max_matching_size(oracle::adjacency(g)) == n;
        CHECK(mates.has_value() == perfect);
        if (mates)
            for (std::size_t v = 0; v < n; ++v) {
                REQUIRE((*mates)[v] != kUnmatched);
                CHECK((*mates)[(*mates)[v]] == v);
                CHECK(g.adjacent(v, (*mates)[v]));
            }
    }
}

TEST_CASE("adjacency-list graphs beyond the bit-set cap") {
    AdjacencyList big(200);
    for (std::size_t v = 0; v + 1 < 200; ++v) big.add_edge(v, v + 1);
    CHECK(max_matching(big).size() == 100);
    CHECK(perfect_matching_mates(big).has_value());
    AdjacencyList odd(201);
    for (std::size_t v = 0; v + 1 < 201; ++v) odd.add_edge(v, v + 1);
    CHECK_FALSE(perfect_matching_mates(odd).has_value());
    CHECK(max_matching(odd).size() == 100);
}

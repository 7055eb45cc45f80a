#include "pfactor/random.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pfactor {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 mixer(seed ^ (stream * 0xD1B54A32D192ED03ULL));
    mixer.next();
    return mixer.next();
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
    check_capacity(n);
    SplitMix64 rng(seed);
    Graph::Builder b(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.uniform() < p) b.add_edge(u, v);
    return b.build();
}

Graph random_graph_edges(std::size_t n, std::size_t m, std::uint64_t seed) {
    check_capacity(n);
    std::vector<Edge> slots;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    if (m > slots.size()) throw std::invalid_argument("more edges requested than vertex pairs");
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(slots.size() - i));
        std::swap(slots[i], slots[j]);
    }
    return Graph(n, std::span<const Edge>(slots.data(), m));
}

}  // namespace pfactor

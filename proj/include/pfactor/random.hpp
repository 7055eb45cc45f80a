#pragma once

#include <cstdint>

#include "pfactor/graph.hpp"

namespace pfactor {

/// SplitMix64 stream: state advances by 0x9E3779B97F4A7C15 and each output is
/// the state passed through the (30, 27, 31) xor-shift-multiply finalizer.
/// Every seeded routine in the library draws from this generator, so results
/// are reproducible across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    /// Uniform integer in [0, bound) by multiply-high; bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

private:
    std::uint64_t state_;
};

/// Mixes a base seed with a stream index into an independent sub-seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// G(n, p): each pair (u < v), visited in lexicographic order, is an edge iff uniform() < p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// G(n, m): m distinct pairs chosen by a partial Fisher-Yates shuffle of the
/// lexicographically ordered pair list.
Graph random_graph_edges(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace pfactor

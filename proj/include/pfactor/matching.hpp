#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pfactor/graph.hpp"

namespace pfactor {

inline constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

/// Edmonds' blossom algorithm on a general graph. Returns mate[v] (kUnmatched
/// for free vertices). A greedy pass seeds the matching, then every free vertex
/// in index order is offered one augmenting-path search; the result is
/// deterministic for a fixed input.
std::vector<std::size_t> maximum_matching_mates(const AdjacencyList& g);

/// Same search, abandoned at the first vertex that cannot be matched.
/// Returns the mates of a perfect matching, or nullopt if none exists.
std::optional<std::vector<std::size_t>> perfect_matching_mates(const AdjacencyList& g);

/// Maximum-cardinality matching as a sorted edge set.
EdgeSet max_matching(const Graph& g);
EdgeSet max_matching(const AdjacencyList& g);

}  // namespace pfactor

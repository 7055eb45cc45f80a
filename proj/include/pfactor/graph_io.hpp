#pragma once

#include <string>
#include <string_view>

#include "pfactor/graph.hpp"

namespace pfactor {

/// Parses one graph6 record. An optional ">>graph6<<" header is accepted;
/// anything after the last data byte (including a newline) is rejected.
Graph parse_graph6(std::string_view text);

/// Encodes without header or trailing newline.
std::string write_graph6(const Graph& g);

/// Plain edge list: "n m" on the first line, then m lines "u v" (0-indexed).
/// Blank lines and lines starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

}  // namespace pfactor

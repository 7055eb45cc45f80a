#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pfactor/graph.hpp"

namespace pfactor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapacity = 3;

/// One graph read from a source, or the reason it could not be read.
struct GraphRecord {
    std::size_t line = 0;  // 1-based line for file sources, 0 otherwise
    std::optional<Graph> graph;
    std::string error;
};

/// Resolves a graph source: inline graph6 (optionally "g6:"), "file:PATH" (one
/// graph6 per line), "edges:PATH", or a constructor expression such as
/// "h:8,1", "l:13,3", "clique_join:2,[4,1,1]", "complete:5", "cycle:6",
/// "path:3", "star:4", "kst:3,4", "petersen", "empty:4".
/// Throws FormatError for an unreadable or malformed single source.
std::vector<GraphRecord> load_graph_source(const std::string& source);

/// Single graph; rejects file sources with more than one record.
Graph load_single_graph(const std::string& source);

/// argv without the program name. Output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pfactor::cli

#pragma once

#include <string>

#include "kcut/graph.hpp"

namespace kcut {

// Strict graph6 codec (undirected, no header line, n <= 64).
// parse_graph6 rejects out-of-range bytes, wrong body length, and nonzero
// padding bits; messages give the 0-based byte offset of the problem.
Graph parse_graph6(const std::string& s);
std::string to_graph6(const Graph& g);

// Plain edge-list format: a header line "n m" followed by exactly m lines
// "u v" with 0-indexed endpoints. Blank lines are ignored. Errors (bad
// token, loop, duplicate, endpoint out of range, wrong edge count) are
// reported with 1-based line numbers.
Graph parse_edge_list(const std::string& text);

} // namespace kcut

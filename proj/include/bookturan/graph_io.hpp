#pragma once

#include <string>
#include <string_view>

#include "bookturan/graph.hpp"

namespace bookturan {

// graph6: the published ASCII format. The header encodes n (one byte up to
// n = 62, '~' plus three bytes up to n = 258047), then the upper triangle is
// packed column by column into 6-bit groups, each offset by 63. Emit and
// parse round-trip bit-exactly; parse rejects bad lengths, bytes outside
// [63,126] and nonzero padding bits.
std::string emit_graph6(const Graph& g);
Graph parse_graph6(std::string_view text);

// Graphviz "graph { ... }" with one line per vertex and per edge.
std::string emit_dot(const Graph& g);

// Plain text: first line is the order, then one "u v" line per edge.
std::string emit_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

}  // namespace bookturan

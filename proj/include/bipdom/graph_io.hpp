#pragma once

#include <string>
#include <string_view>

#include "bipdom/graph.hpp"

namespace bipdom {

/// Reads the line-oriented graph text format:
///
///     # comment
///     p graph <n> <m>
///     v <label>        (n lines, in vertex order)
///     e <label> <label> (m lines)
///
/// Throws SyntaxError on malformed input, plus the from_edge_list errors.
Graph parse_graph_text(std::string_view text);

/// Writes the same format; edges in normalized sorted order.
std::string write_graph_text(const Graph& g);

/// Undirected DOT, one vertex and one edge per line.
std::string to_dot(const Graph& g);

} // namespace bipdom

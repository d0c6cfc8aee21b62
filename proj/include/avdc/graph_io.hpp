#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "avdc/graph.hpp"

namespace avdc {

enum class GraphFormat { Graph6, Dimacs, EdgeList };

// graph6 follows McKay's encoding (bytes offset by 63, column-wise upper
// triangle). DIMACS is "p edge n m" plus 1-indexed "e u v" lines. The edge
// list holds one 0-indexed "u v" pair per line; '#' starts a comment, and the
// comment "# vertices N" fixes the vertex count so isolated vertices survive.
Graph parse_graph(std::string_view text, GraphFormat format);
std::string emit_graph(const Graph& g, GraphFormat format);

std::optional<GraphFormat> format_from_name(std::string_view name);
std::string_view format_name(GraphFormat format);

// Guess from content: DIMACS if the first meaningful line starts with 'p' or
// 'c', edge list if it holds two integers, graph6 otherwise.
GraphFormat sniff_format(std::string_view text);

}  // namespace avdc

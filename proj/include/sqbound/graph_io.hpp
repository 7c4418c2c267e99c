#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sqbound/graph.hpp"

namespace sqbound {

enum class GraphFormat { graph6, edgelist };

GraphFormat parse_graph_format(std::string_view name);
std::string to_string(GraphFormat format);

// graph6: N(n) header then the upper triangle (column-major, i < j) packed
// into 6-bit groups offset by 63. An optional ">>graph6<<" prefix is accepted.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Edge list: first non-comment line holds n, each following line "u v".
// Everything after '#' on a line is ignored.
Graph parse_edgelist(std::string_view text);
std::string to_edgelist(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat format);
std::string format_graph(const Graph& g, GraphFormat format);

// Throws std::ios_base::failure on I/O errors, ParseError on bad content.
Graph read_graph_file(const std::filesystem::path& path, GraphFormat format);

}  // namespace sqbound

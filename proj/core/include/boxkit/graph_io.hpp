#ifndef BOXKIT_GRAPH_IO_HPP
#define BOXKIT_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include "boxkit/graph.hpp"

namespace boxkit {

// JSON graph format: {"n": int, "edges": [[u,v],...], "labels": [...]?}
// with 0 <= u < v < n, edges sorted lexicographically, no duplicates.
Graph read_graph_json(std::string_view bytes);
std::string write_graph_json(const Graph& g);

// DOT is export-only.
std::string write_graph_dot(const Graph& g);

enum class GraphFormat { json, dot };
std::string write_graph(const Graph& g, GraphFormat fmt);

}  // namespace boxkit

#endif

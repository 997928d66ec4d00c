#pragma once

#include <iosfwd>
#include <string>

#include "tcoi/graph.hpp"

namespace tcoi {

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
// The reader accepts endpoints in any order; the writer emits sorted pairs
// with u < v.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// graph6 (one graph per line, optional ">>graph6<<" header on input).
Graph read_graph6_line(const std::string& line);
std::string write_graph6(const Graph& g);

// Reads a graph file, auto-detecting edge-list vs graph6 from the first line.
Graph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const Graph& g);
void write_graph6_file(const std::string& path, const Graph& g);

std::string write_dot(const Graph& g);

}  // namespace tcoi

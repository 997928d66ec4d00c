#pragma once

#include <string>
#include <vector>

#include "tcoi/graph.hpp"

namespace tcoi {

// Canonical key for graphs up to isomorphism. Exact but exponential in the
// worst case; guarded to n <= 16 (cost grows with the automorphism group).
// Two graphs have equal keys iff they are isomorphic.
std::string canonical_form(const Graph& g);

// Isomorphism test via color refinement plus backtracking; practical well
// beyond the canonical_form guard for irregular graphs.
bool are_isomorphic(const Graph& a, const Graph& b);

// AHU-style canonical code for free trees (center-rooted level encoding).
// Linear-ish; equal codes iff isomorphic trees.
std::string canonical_tree_code(const Graph& t);

// Deterministic canonically-labeled representative of a free tree.
Graph canonical_tree_relabel(const Graph& t);

// One representative per isomorphism class of simple graphs on n vertices,
// built by vertex augmentation. Guarded to n <= 9.
std::vector<Graph> enumerate_graphs(int n);
std::vector<Graph> enumerate_connected_graphs(int n);

}  // namespace tcoi

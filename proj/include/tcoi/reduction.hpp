#pragma once

#include <array>
#include <vector>

#include "tcoi/graph.hpp"
#include "tcoi/solvers.hpp"

namespace tcoi {

// One six-vertex gadget tree wired to a base vertex: two adjacent degree-3
// vertices u, v, each carrying two leaves; u additionally joined to the base.
struct GadgetAttachment {
    int base_vertex = -1;
    int gadget_u = -1;
    int gadget_v = -1;
    std::array<int, 4> gadget_leaves{-1, -1, -1, -1};  // u1, u2, v1, v2
};

// The gadget alone: ids (u, v, u1, u2, v1, v2) = (0..5).
Graph build_t6();

struct GtResult {
    Graph graph;  // 7n vertices
    std::vector<GadgetAttachment> attachments;
};

// Attaches one gadget per vertex of g. Gadget i occupies the contiguous id
// block n + 6i .. n + 6i + 5 in the order (u, v, u1, u2, v1, v2).
// Requires at least one edge. Planarity is preserved by the construction
// (each gadget hangs off a single vertex); the library does not test it.
GtResult build_gt(const Graph& g);

struct ReductionCheck {
    int lhs = 0;  // gamma_tcoi of the gadget graph
    int rhs = 0;  // 3n - beta of the input
    bool holds = false;
    SolveResult gt_solve;    // carries the witness on the gadget graph
    SolveResult beta_solve;  // witness on the input
};

ReductionCheck verify_reduction(const Graph& g);

struct DecisionTransfer {
    int j = 0;  // 3n - k
    bool gamma_le_j = false;
    bool beta_ge_k = false;
    bool equivalence = false;
};

DecisionTransfer decision_transfer(const Graph& g, int k);

}  // namespace tcoi

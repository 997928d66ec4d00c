#include "tcoi/reduction.hpp"

namespace tcoi {

Graph build_t6() {
    // u=0, v=1, leaves u1=2, u2=3, v1=4, v2=5
    return Graph(6, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}});
}

GtResult build_gt(const Graph& g) {
    if (g.size() == 0)
        throw precondition_error("the gadget construction requires an input with at least one edge");
    int n = g.order();
    std::vector<std::pair<int, int>> edges = g.edges();
    std::vector<GadgetAttachment> attachments;
    attachments.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        int base = n + 6 * i;
        GadgetAttachment a;
        a.base_vertex = i;
        a.gadget_u = base;
        a.gadget_v = base + 1;
        a.gadget_leaves = {base + 2, base + 3, base + 4, base + 5};
        edges.emplace_back(a.gadget_u, a.gadget_v);
        edges.emplace_back(a.gadget_u, a.gadget_leaves[0]);
        edges.emplace_back(a.gadget_u, a.gadget_leaves[1]);
        edges.emplace_back(a.gadget_v, a.gadget_leaves[2]);
        edges.emplace_back(a.gadget_v, a.gadget_leaves[3]);
        edges.emplace_back(i, a.gadget_u);
        attachments.push_back(a);
    }
    return {Graph(7 * n, std::move(edges)), std::move(attachments)};
}

ReductionCheck verify_reduction(const Graph& g) {
    GtResult gt = build_gt(g);
    ReductionCheck check;
    check.gt_solve = gamma_tcoi(gt.graph);
    check.beta_solve = beta(g);
    check.lhs = check.gt_solve.value;
    check.rhs = 3 * g.order() - check.beta_solve.value;
    check.holds = check.lhs == check.rhs;
    return check;
}

DecisionTransfer decision_transfer(const Graph& g, int k) {
    GtResult gt = build_gt(g);
    DecisionTransfer t;
    t.j = 3 * g.order() - k;
    t.gamma_le_j = gamma_tcoi(gt.graph).value <= t.j;
    t.beta_ge_k = beta(g).value >= k;
    t.equivalence = t.gamma_le_j == t.beta_ge_k;
    return t;
}

}  // namespace tcoi

#include <random>

#include "doctest.h"
#include "support/corpus.hpp"
#include "tcoi/graph.hpp"
#include "tcoi/iso.hpp"
#include "tcoi/reduction.hpp"
#include "tcoi/solvers.hpp"

using namespace tcoi;

namespace {
Graph k4_minus_e() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }
}  // namespace

TEST_CASE("the gadget tree") {
    Graph t6 = build_t6();
    CHECK(t6.order() == 6);
    CHECK(t6.size() == 5);
    CHECK(is_tree(t6));
    std::vector<int> degrees;
    for (int v = 0; v < 6; ++v) degrees.push_back(t6.degree(v));
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<int>{1, 1, 1, 1, 3, 3});
    CHECK(t6.has_edge(0, 1));  // the two degree-3 vertices are adjacent
    // diameter 3 via BFS
    int diameter = 0;
    for (int v = 0; v < 6; ++v)
        for (int d : distances_from(t6, v)) diameter = std::max(diameter, d);
    CHECK(diameter == 3);
}

TEST_CASE("gadget graph structure") {
    Graph p2 = make_path(2);
    GtResult gt = build_gt(p2);
    CHECK(gt.graph.order() == 14);
    CHECK(gt.graph.size() == 13);
    REQUIRE(gt.attachments.size() == 2);

    Graph base = k4_minus_e();
    GtResult g4 = build_gt(base);
    CHECK(g4.graph.order() == 28);  // always 7n
    // original edges preserved as an induced subgraph on ids 0..n-1
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v)
            CHECK(g4.graph.has_edge(u, v) == base.has_edge(u, v));
    for (const auto& a : g4.attachments) {
        CHECK(g4.graph.has_edge(a.base_vertex, a.gadget_u));
        CHECK(g4.graph.has_edge(a.gadget_u, a.gadget_v));
        CHECK(g4.graph.has_edge(a.gadget_u, a.gadget_leaves[0]));
        CHECK(g4.graph.has_edge(a.gadget_u, a.gadget_leaves[1]));
        CHECK(g4.graph.has_edge(a.gadget_v, a.gadget_leaves[2]));
        CHECK(g4.graph.has_edge(a.gadget_v, a.gadget_leaves[3]));
        CHECK(g4.graph.degree(a.gadget_u) == 4);
        CHECK(g4.graph.degree(a.gadget_v) == 3);
        for (int leaf : a.gadget_leaves) CHECK(g4.graph.degree(leaf) == 1);
    }

    CHECK_THROWS_AS(build_gt(Graph(3)), precondition_error);  // edgeless
}

TEST_CASE("reduction identity on the named instances") {
    ReductionCheck c = verify_reduction(k4_minus_e());
    CHECK(c.lhs == 10);
    CHECK(c.rhs == 10);
    CHECK(c.holds);

    c = verify_reduction(make_path(2));
    CHECK(c.lhs == 5);
    CHECK(c.rhs == 5);
    CHECK(c.holds);

    c = verify_reduction(make_path(3));
    CHECK(c.lhs == 7);
    CHECK(c.rhs == 7);
    CHECK(c.holds);
}

TEST_CASE("reduction identity on every connected graph with n <= 4 plus random instances") {
    for (int n = 2; n <= 4; ++n)
        for (const Graph& g : enumerate_connected_graphs(n)) {
            ReductionCheck c = verify_reduction(g);
            CHECK(c.holds);
        }
    std::mt19937 rng(211);
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = corpus::random_connected(rng, 5 + static_cast<int>(rng() % 2));
        CHECK(verify_reduction(g).holds);
    }
}

TEST_CASE("minimum witnesses on the gadget graph hit every gadget twice and the base") {
    for (const Graph& g : {make_path(2), make_path(3), k4_minus_e()}) {
        GtResult gt = build_gt(g);
        SolveResult r = gamma_tcoi(gt.graph);
        bool touches_base = false;
        for (int v = 0; v < g.order(); ++v)
            if (r.witness.contains(v)) touches_base = true;
        CHECK(touches_base);
        for (const auto& a : gt.attachments) {
            int inside = 0;
            for (int v : {a.gadget_u, a.gadget_v, a.gadget_leaves[0], a.gadget_leaves[1],
                          a.gadget_leaves[2], a.gadget_leaves[3]})
                if (r.witness.contains(v)) ++inside;
            CHECK(inside >= 2);
        }
    }
}

TEST_CASE("decision transfer equivalence") {
    DecisionTransfer t = decision_transfer(k4_minus_e(), 2);
    CHECK(t.j == 10);
    CHECK(t.gamma_le_j);
    CHECK(t.beta_ge_k);
    CHECK(t.equivalence);

    t = decision_transfer(k4_minus_e(), 3);
    CHECK(t.j == 9);
    CHECK(!t.gamma_le_j);
    CHECK(!t.beta_ge_k);
    CHECK(t.equivalence);

    t = decision_transfer(make_path(3), 2);
    CHECK(t.j == 7);
    CHECK(t.equivalence);

    // the equivalence is not an accident of one threshold
    for (int k = 1; k <= 4; ++k) CHECK(decision_transfer(k4_minus_e(), k).equivalence);
}

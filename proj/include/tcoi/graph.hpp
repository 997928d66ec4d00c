#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tcoi {

// Malformed input data (bad vertex ids, unparsable files).
struct invalid_input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An operation was called on a graph that violates its stated requirements
// (isolated vertices, not a tree, out-of-range parameters, ...).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The requested optimum does not exist (e.g. total co-independent domination
// on P2 or on a disjoint union of P2 components).
struct infeasible_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Immutable simple undirected graph over vertex ids 0..n-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    // Validates: ids in range, no self-loops, no duplicate edges.
    Graph(int n, std::vector<std::pair<int, int>> edge_list);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    bool has_edge(int u, int v) const;
    // Sorted edge list, u < v in every pair.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    int min_degree() const;  // 0 on the empty graph
    int max_degree() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// Subset of the vertices of a graph of a fixed order.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe);
    VertexSet(int universe, std::initializer_list<int> members);
    VertexSet(int universe, const std::vector<int>& members);

    static VertexSet full(int universe);
    static VertexSet from_mask(int universe, std::uint64_t mask);

    int universe() const { return universe_; }
    int count() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool contains(int v) const;

    void insert(int v);
    void erase(int v);

    VertexSet complement() const;
    std::vector<int> to_vector() const;  // ascending order
    std::uint64_t to_mask() const;       // requires universe <= 64

    bool operator==(const VertexSet& other) const {
        return universe_ == other.universe_ && bits_ == other.bits_;
    }

private:
    int universe_ = 0;
    std::vector<bool> bits_;
    int count_ = 0;
};

// ---- structural predicates ------------------------------------------------

// True iff no edge of g has both endpoints in s. The empty set is independent.
bool is_independent(const Graph& g, const VertexSet& s);

// True iff every edge of g has at least one endpoint in s.
bool is_vertex_cover(const Graph& g, const VertexSet& s);

// True iff every vertex of g (including members of s) has a neighbor in s.
bool is_total_dominating(const Graph& g, const VertexSet& s);

// Total dominating set whose complement is independent and nonempty.
bool is_tcid(const Graph& g, const VertexSet& s);

// Maximal connected vertex sets, ordered by minimum vertex id.
std::vector<VertexSet> connected_components(const Graph& g);

constexpr int kUnreachable = -1;

// BFS hop counts from v; kUnreachable marks vertices in other components.
std::vector<int> distances_from(const Graph& g, int v);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
// Star = one center adjacent to all others, n >= 2 (includes P2, P3).
bool is_star(const Graph& g);

struct TreeClasses {
    VertexSet leaves;
    VertexSet supports;           // adjacent to at least one leaf
    VertexSet semi_supports;      // non-leaf, non-support, adjacent to a support
    VertexSet isolated_supports;  // supports with no support neighbor
};

// Requires a tree with n >= 2.
TreeClasses tree_vertex_classes(const Graph& t);

// ---- small named builders --------------------------------------------------

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_star(int leaves);                  // center 0, leaves 1..k
Graph make_double_star(int k1, int k2);       // centers 0,1
Graph make_complete(int n);

// Subgraph induced by the given vertices; ids are compacted preserving order.
Graph induced_subgraph(const Graph& g, const VertexSet& vs,
                       std::vector<int>* old_to_new = nullptr);

// Disjoint union, ids of b shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace tcoi

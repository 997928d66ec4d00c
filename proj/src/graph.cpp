#include "tcoi/graph.hpp"

#include <algorithm>
#include <queue>

namespace tcoi {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(std::max(n, 0))) {
    if (n < 0) throw invalid_input_error("graph order must be non-negative");
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_list) : Graph(n) {
    for (auto& [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw invalid_input_error("edge endpoint out of range: (" +
                                      std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw invalid_input_error("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw invalid_input_error("duplicate edge in edge list");
    edges_ = std::move(edge_list);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::min_degree() const {
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

VertexSet::VertexSet(int universe)
    : universe_(universe), bits_(static_cast<size_t>(std::max(universe, 0)), false) {
    if (universe < 0) throw invalid_input_error("vertex set universe must be non-negative");
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) insert(v);
}

VertexSet::VertexSet(int universe, const std::vector<int>& members) : VertexSet(universe) {
    for (int v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.insert(v);
    return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
    if (universe > 64) throw invalid_input_error("mask construction limited to universe <= 64");
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v)
        if (mask >> v & 1u) s.insert(v);
    return s;
}

bool VertexSet::contains(int v) const {
    return v >= 0 && v < universe_ && bits_[static_cast<size_t>(v)];
}

void VertexSet::insert(int v) {
    if (v < 0 || v >= universe_)
        throw invalid_input_error("vertex " + std::to_string(v) + " outside universe of size " +
                                  std::to_string(universe_));
    if (!bits_[static_cast<size_t>(v)]) {
        bits_[static_cast<size_t>(v)] = true;
        ++count_;
    }
}

void VertexSet::erase(int v) {
    if (v < 0 || v >= universe_) return;
    if (bits_[static_cast<size_t>(v)]) {
        bits_[static_cast<size_t>(v)] = false;
        --count_;
    }
}

VertexSet VertexSet::complement() const {
    VertexSet s(universe_);
    for (int v = 0; v < universe_; ++v)
        if (!bits_[static_cast<size_t>(v)]) s.insert(v);
    return s;
}

std::vector<int> VertexSet::to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count_));
    for (int v = 0; v < universe_; ++v)
        if (bits_[static_cast<size_t>(v)]) out.push_back(v);
    return out;
}

std::uint64_t VertexSet::to_mask() const {
    if (universe_ > 64) throw invalid_input_error("mask view limited to universe <= 64");
    std::uint64_t mask = 0;
    for (int v = 0; v < universe_; ++v)
        if (bits_[static_cast<size_t>(v)]) mask |= std::uint64_t{1} << v;
    return mask;
}

namespace {

void check_set(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw invalid_input_error("vertex set universe does not match graph order");
}

}  // namespace

bool is_independent(const Graph& g, const VertexSet& s) {
    check_set(g, s);
    for (auto [u, v] : g.edges())
        if (s.contains(u) && s.contains(v)) return false;
    return true;
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
    check_set(g, s);
    for (auto [u, v] : g.edges())
        if (!s.contains(u) && !s.contains(v)) return false;
    return true;
}

bool is_total_dominating(const Graph& g, const VertexSet& s) {
    check_set(g, s);
    for (int v = 0; v < g.order(); ++v) {
        bool dominated = false;
        for (int u : g.neighbors(v))
            if (s.contains(u)) {
                dominated = true;
                break;
            }
        if (!dominated) return false;
    }
    return true;
}

bool is_tcid(const Graph& g, const VertexSet& s) {
    check_set(g, s);
    if (s.count() == g.order()) return false;  // complement must be nonempty
    return is_total_dominating(g, s) && is_independent(g, s.complement());
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> components;
    std::vector<bool> seen(static_cast<size_t>(g.order()), false);
    for (int start = 0; start < g.order(); ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        VertexSet comp(g.order());
        std::queue<int> queue;
        queue.push(start);
        seen[static_cast<size_t>(start)] = true;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            comp.insert(v);
            for (int u : g.neighbors(v))
                if (!seen[static_cast<size_t>(u)]) {
                    seen[static_cast<size_t>(u)] = true;
                    queue.push(u);
                }
        }
        components.push_back(std::move(comp));
    }
    return components;
}

std::vector<int> distances_from(const Graph& g, int v) {
    if (v < 0 || v >= g.order())
        throw invalid_input_error("source vertex out of range: " + std::to_string(v));
    std::vector<int> dist(static_cast<size_t>(g.order()), kUnreachable);
    std::queue<int> queue;
    dist[static_cast<size_t>(v)] = 0;
    queue.push(v);
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop();
        for (int u : g.neighbors(x))
            if (dist[static_cast<size_t>(u)] == kUnreachable) {
                dist[static_cast<size_t>(u)] = dist[static_cast<size_t>(x)] + 1;
                queue.push(u);
            }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    return connected_components(g).size() == 1;
}

bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

bool is_star(const Graph& g) {
    int n = g.order();
    if (n < 2 || !is_tree(g)) return false;
    if (n == 2) return true;
    int centers = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) ++centers;
    return centers == 1;
}

TreeClasses tree_vertex_classes(const Graph& t) {
    if (!is_tree(t) || t.order() < 2)
        throw precondition_error("tree_vertex_classes requires a tree with n >= 2");
    int n = t.order();
    TreeClasses c{VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n)};
    for (int v = 0; v < n; ++v)
        if (t.degree(v) == 1) c.leaves.insert(v);
    for (int v = 0; v < n; ++v) {
        if (c.leaves.contains(v) && n >= 3) continue;
        for (int u : t.neighbors(v))
            if (c.leaves.contains(u)) {
                c.supports.insert(v);
                break;
            }
    }
    for (int v = 0; v < n; ++v) {
        if (c.leaves.contains(v) || c.supports.contains(v)) continue;
        for (int u : t.neighbors(v))
            if (c.supports.contains(u)) {
                c.semi_supports.insert(v);
                break;
            }
    }
    for (int v : c.supports.to_vector()) {
        bool has_support_neighbor = false;
        for (int u : t.neighbors(v))
            if (c.supports.contains(u)) {
                has_support_neighbor = true;
                break;
            }
        if (!has_support_neighbor) c.isolated_supports.insert(v);
    }
    return c;
}

Graph make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw precondition_error("cycle requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

Graph make_star(int leaves) {
    if (leaves < 1) throw precondition_error("star requires at least one leaf");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph(leaves + 1, std::move(edges));
}

Graph make_double_star(int k1, int k2) {
    if (k1 < 1 || k2 < 1) throw precondition_error("double star requires k1,k2 >= 1");
    std::vector<std::pair<int, int>> edges{{0, 1}};
    int next = 2;
    for (int i = 0; i < k1; ++i) edges.emplace_back(0, next++);
    for (int i = 0; i < k2; ++i) edges.emplace_back(1, next++);
    return Graph(next, std::move(edges));
}

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph induced_subgraph(const Graph& g, const VertexSet& vs, std::vector<int>* old_to_new) {
    if (vs.universe() != g.order())
        throw invalid_input_error("vertex set universe does not match graph order");
    std::vector<int> map(static_cast<size_t>(g.order()), -1);
    int next = 0;
    for (int v : vs.to_vector()) map[static_cast<size_t>(v)] = next++;
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (map[static_cast<size_t>(u)] >= 0 && map[static_cast<size_t>(v)] >= 0)
            edges.emplace_back(map[static_cast<size_t>(u)], map[static_cast<size_t>(v)]);
    if (old_to_new) *old_to_new = std::move(map);
    return Graph(next, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
    return Graph(a.order() + b.order(), std::move(edges));
}

}  // namespace tcoi

#include "tcoi/iso.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_set>

namespace tcoi {

namespace {

// Backtracking search for the lexicographically largest adjacency encoding.
// Position k contributes one "column": the adjacency pattern of the vertex
// placed at k against positions 0..k-1, read as a k-bit integer.
struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<int> best;       // best column values found so far
    std::vector<int> placed;     // placed[k] = original vertex at position k
    std::vector<bool> used;
    std::vector<std::uint64_t> adj;

    explicit CanonSearch(const Graph& graph)
        : g(graph),
          n(graph.order()),
          best(static_cast<size_t>(graph.order()), -1),
          used(static_cast<size_t>(graph.order()), false),
          adj(static_cast<size_t>(graph.order()), 0) {
        for (auto [u, v] : g.edges()) {
            adj[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
            adj[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
        }
    }

    int column_of(int v, int k) const {
        int c = 0;
        for (int i = 0; i < k; ++i)
            c = (c << 1) | static_cast<int>(adj[static_cast<size_t>(v)] >> placed[static_cast<size_t>(i)] & 1u);
        return c;
    }

    void dfs(int k) {
        if (k == n) return;
        std::vector<std::pair<int, int>> cands;  // (-column, vertex) for desc sort
        for (int v = 0; v < n; ++v)
            if (!used[static_cast<size_t>(v)]) cands.emplace_back(-column_of(v, k), v);
        std::sort(cands.begin(), cands.end());
        for (auto [negc, v] : cands) {
            int c = -negc;
            if (c < best[static_cast<size_t>(k)]) break;
            if (c > best[static_cast<size_t>(k)]) {
                best[static_cast<size_t>(k)] = c;
                std::fill(best.begin() + k + 1, best.end(), -1);
            }
            used[static_cast<size_t>(v)] = true;
            placed.push_back(v);
            dfs(k + 1);
            placed.pop_back();
            used[static_cast<size_t>(v)] = false;
        }
    }
};

}  // namespace

std::string canonical_form(const Graph& g) {
    if (g.order() > 16)
        throw precondition_error("canonical_form guarded to n <= 16; use are_isomorphic or tree codes");
    if (g.order() == 0) return "0:";
    CanonSearch search(g);
    search.dfs(0);
    std::string key = std::to_string(g.order()) + ":";
    for (int k = 1; k < g.order(); ++k) {
        key.push_back(static_cast<char>('a' + (search.best[static_cast<size_t>(k)] & 0xf)));
        key.push_back(static_cast<char>('a' + (search.best[static_cast<size_t>(k)] >> 4 & 0xf)));
        key.push_back(static_cast<char>('a' + (search.best[static_cast<size_t>(k)] >> 8 & 0xf)));
        key.push_back(static_cast<char>('a' + (search.best[static_cast<size_t>(k)] >> 12 & 0xf)));
    }
    return key;
}

namespace {

// Joint iterated neighborhood refinement: colors are drawn from one shared
// space so they are comparable between the two graphs.
std::pair<std::vector<int>, std::vector<int>> refine_colors_pair(const Graph& a, const Graph& b) {
    int n = a.order();
    std::vector<int> ca(static_cast<size_t>(n)), cb(static_cast<size_t>(b.order()));
    for (int v = 0; v < n; ++v) ca[static_cast<size_t>(v)] = a.degree(v);
    for (int v = 0; v < b.order(); ++v) cb[static_cast<size_t>(v)] = b.degree(v);
    using Sig = std::pair<int, std::vector<int>>;
    auto signatures = [](const Graph& g, const std::vector<int>& color) {
        std::vector<Sig> sig(static_cast<size_t>(g.order()));
        for (int v = 0; v < g.order(); ++v) {
            std::vector<int> nb;
            nb.reserve(g.neighbors(v).size());
            for (int u : g.neighbors(v)) nb.push_back(color[static_cast<size_t>(u)]);
            std::sort(nb.begin(), nb.end());
            sig[static_cast<size_t>(v)] = {color[static_cast<size_t>(v)], std::move(nb)};
        }
        return sig;
    };
    for (int round = 0; round < n; ++round) {
        auto sa = signatures(a, ca);
        auto sb = signatures(b, cb);
        std::map<Sig, int> ids;
        for (const auto& s : sa) ids.emplace(s, 0);
        for (const auto& s : sb) ids.emplace(s, 0);
        int next_id = 0;
        for (auto& [sig, id] : ids) id = next_id++;
        std::vector<int> na(static_cast<size_t>(a.order())), nb(static_cast<size_t>(b.order()));
        for (int v = 0; v < a.order(); ++v) na[static_cast<size_t>(v)] = ids[sa[static_cast<size_t>(v)]];
        for (int v = 0; v < b.order(); ++v) nb[static_cast<size_t>(v)] = ids[sb[static_cast<size_t>(v)]];
        if (na == ca && nb == cb) break;
        ca = std::move(na);
        cb = std::move(nb);
    }
    return {std::move(ca), std::move(cb)};
}

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return false;
    int n = a.order();
    if (n == 0) return true;
    auto [ca, cb] = refine_colors_pair(a, b);
    {
        auto sa = ca;
        auto sb = cb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    // Order a's vertices most-constrained first: rare colors early.
    std::vector<int> color_count(static_cast<size_t>(n) + 1, 0);
    for (int c : ca) ++color_count[static_cast<size_t>(c)];
    std::vector<int> order(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        int cx = color_count[static_cast<size_t>(ca[static_cast<size_t>(x)])];
        int cy = color_count[static_cast<size_t>(ca[static_cast<size_t>(y)])];
        if (cx != cy) return cx < cy;
        return x < y;
    });
    std::vector<int> map_ab(static_cast<size_t>(n), -1), used_b(static_cast<size_t>(n), 0);
    std::function<bool(int)> match = [&](int idx) -> bool {
        if (idx == n) return true;
        int va = order[static_cast<size_t>(idx)];
        for (int vb = 0; vb < n; ++vb) {
            if (used_b[static_cast<size_t>(vb)]) continue;
            if (ca[static_cast<size_t>(va)] != cb[static_cast<size_t>(vb)]) continue;
            bool ok = true;
            for (int i = 0; i < idx && ok; ++i) {
                int ua = order[static_cast<size_t>(i)];
                if (a.has_edge(va, ua) != b.has_edge(vb, map_ab[static_cast<size_t>(ua)])) ok = false;
            }
            if (!ok) continue;
            map_ab[static_cast<size_t>(va)] = vb;
            used_b[static_cast<size_t>(vb)] = 1;
            if (match(idx + 1)) return true;
            used_b[static_cast<size_t>(vb)] = 0;
            map_ab[static_cast<size_t>(va)] = -1;
        }
        return false;
    };
    return match(0);
}

namespace {

// Tree centers by iterative leaf stripping (one or two, adjacent if two).
std::vector<int> tree_centers(const Graph& t) {
    int n = t.order();
    if (n == 1) return {0};
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<int> frontier;
    for (int v = 0; v < n; ++v) {
        deg[static_cast<size_t>(v)] = t.degree(v);
        if (deg[static_cast<size_t>(v)] == 1) frontier.push_back(v);
    }
    int remaining = n;
    std::vector<int> current = frontier;
    while (remaining > 2) {
        std::vector<int> next;
        remaining -= static_cast<int>(current.size());
        for (int v : current)
            for (int u : t.neighbors(v))
                if (--deg[static_cast<size_t>(u)] == 1) next.push_back(u);
        current = std::move(next);
    }
    std::sort(current.begin(), current.end());
    return current;
}

std::string rooted_code(const Graph& t, int root, int parent) {
    std::vector<std::string> child_codes;
    for (int u : t.neighbors(root))
        if (u != parent) child_codes.push_back(rooted_code(t, u, root));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    code += ")";
    return code;
}

void canonical_preorder(const Graph& t, int root, int parent, std::vector<int>& label_of,
                        int& next_label) {
    label_of[static_cast<size_t>(root)] = next_label++;
    std::vector<std::pair<std::string, int>> children;
    for (int u : t.neighbors(root))
        if (u != parent) children.emplace_back(rooted_code(t, u, root), u);
    // Larger subtree codes first; original id as deterministic tie-break.
    std::sort(children.begin(), children.end(), [](const auto& x, const auto& y) {
        if (x.first != y.first) return x.first > y.first;
        return x.second < y.second;
    });
    for (auto& [code, u] : children) canonical_preorder(t, u, root, label_of, next_label);
}

}  // namespace

std::string canonical_tree_code(const Graph& t) {
    if (!is_tree(t)) throw precondition_error("canonical_tree_code requires a tree");
    auto centers = tree_centers(t);
    if (centers.size() == 1) return "C" + rooted_code(t, centers[0], -1);
    std::string a = rooted_code(t, centers[0], centers[1]);
    std::string b = rooted_code(t, centers[1], centers[0]);
    if (a > b) std::swap(a, b);
    return "B" + a + "|" + b;
}

Graph canonical_tree_relabel(const Graph& t) {
    if (!is_tree(t)) throw precondition_error("canonical_tree_relabel requires a tree");
    auto centers = tree_centers(t);
    int root = centers[0];
    int parent = -1;
    if (centers.size() == 2) {
        // Root at the endpoint with the larger half-code so the choice is
        // isomorphism-invariant.
        std::string a = rooted_code(t, centers[0], centers[1]);
        std::string b = rooted_code(t, centers[1], centers[0]);
        root = a >= b ? centers[0] : centers[1];
    }
    std::vector<int> label_of(static_cast<size_t>(t.order()), -1);
    int next_label = 0;
    canonical_preorder(t, root, parent, label_of, next_label);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : t.edges())
        edges.emplace_back(label_of[static_cast<size_t>(u)], label_of[static_cast<size_t>(v)]);
    return Graph(t.order(), std::move(edges));
}

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 0 || n > 9) throw precondition_error("enumerate_graphs guarded to 0 <= n <= 9");
    if (n == 0) return {Graph(0)};
    std::vector<Graph> level = {Graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::unordered_set<std::string> seen;
        std::vector<Graph> next;
        for (const Graph& h : level) {
            for (std::uint32_t nb = 0; nb < (1u << (k - 1)); ++nb) {
                std::vector<std::pair<int, int>> edges = h.edges();
                for (int v = 0; v < k - 1; ++v)
                    if (nb >> v & 1u) edges.emplace_back(v, k - 1);
                Graph candidate(k, std::move(edges));
                std::string key = canonical_form(candidate);
                if (seen.insert(key).second) next.push_back(std::move(candidate));
            }
        }
        level = std::move(next);
    }
    return level;
}

std::vector<Graph> enumerate_connected_graphs(int n) {
    std::vector<Graph> out;
    for (auto& g : enumerate_graphs(n))
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

}  // namespace tcoi

#include "tcoi/solvers.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <vector>

namespace tcoi {

const char* problem_name(Problem p) {
    switch (p) {
        case Problem::gamma_t: return "gamma_t";
        case Problem::gamma_tcoi: return "gamma_tcoi";
        case Problem::alpha: return "alpha";
        case Problem::beta: return "beta";
    }
    return "?";
}

const char* method_name(Method m) {
    switch (m) {
        case Method::brute_force: return "brute_force";
        case Method::branch_and_bound: return "branch_and_bound";
        case Method::tree_dp: return "tree_dp";
    }
    return "?";
}

ForcedAssignment::ForcedAssignment(VertexSet in, VertexSet out)
    : forced_in(std::move(in)), forced_out(std::move(out)) {
    if (forced_in.universe() != forced_out.universe())
        throw invalid_input_error("forced sets must share a universe");
    for (int v : forced_in.to_vector())
        if (forced_out.contains(v))
            throw invalid_input_error("forced_in and forced_out must be disjoint");
}

namespace {

constexpr int kBruteForceLimit = 24;

struct MaskGraph {
    int n = 0;
    std::uint64_t all = 0;
    std::vector<std::uint64_t> adj;
};

MaskGraph to_masks(const Graph& g) {
    if (g.order() > 64) throw precondition_error("exact solvers are limited to n <= 64");
    MaskGraph m;
    m.n = g.order();
    m.all = m.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m.n) - 1;
    m.adj.assign(static_cast<size_t>(m.n), 0);
    for (auto [u, v] : g.edges()) {
        m.adj[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
        m.adj[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
    }
    return m;
}

int popcount(std::uint64_t x) { return std::popcount(x); }

bool mask_total_dominating(const MaskGraph& g, std::uint64_t d) {
    for (int v = 0; v < g.n; ++v)
        if ((g.adj[static_cast<size_t>(v)] & d) == 0) return false;
    return true;
}

bool mask_independent(const MaskGraph& g, std::uint64_t s) {
    for (std::uint64_t rest = s; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        if (g.adj[static_cast<size_t>(v)] & s) return false;
    }
    return true;
}

bool mask_feasible(const MaskGraph& g, Problem p, std::uint64_t s) {
    switch (p) {
        case Problem::gamma_t:
            return mask_total_dominating(g, s);
        case Problem::gamma_tcoi:
            return (g.all & ~s) != 0 && mask_total_dominating(g, s) &&
                   mask_independent(g, g.all & ~s);
        case Problem::alpha:
            return mask_independent(g, g.all & ~s);  // cover <=> complement independent
        case Problem::beta:
            return mask_independent(g, s);
    }
    return false;
}

void require_no_isolated(const Graph& g, const char* who) {
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            throw precondition_error(std::string(who) +
                                     " is not defined for graphs with isolated vertices "
                                     "(vertex " +
                                     std::to_string(v) + " is isolated)");
}

bool all_components_are_p2(const Graph& g) {
    if (g.order() == 0) return false;
    for (const auto& comp : connected_components(g))
        if (comp.count() != 2) return false;
    return true;
}

SolveResult checked(const Graph& g, Problem p, SolveResult r) {
    MaskGraph m = to_masks(g);
    if (r.witness.count() != r.value || !mask_feasible(m, p, r.witness.to_mask()))
        throw std::logic_error(std::string("internal solver error: witness does not certify ") +
                               problem_name(p));
    return r;
}

// ---- subset enumeration oracle ---------------------------------------------

// Visits k-subsets of the free vertices in lexicographic order, merged with
// forced_in; returns the first mask accepted by `ok`.
template <typename Pred>
std::optional<std::uint64_t> first_k_subset(const std::vector<int>& free_ids, int k,
                                            std::uint64_t base, Pred ok) {
    int f = static_cast<int>(free_ids.size());
    if (k < 0 || k > f) return std::nullopt;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    for (;;) {
        std::uint64_t mask = base;
        for (int i : idx) mask |= std::uint64_t{1} << free_ids[static_cast<size_t>(i)];
        if (ok(mask)) return mask;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == f - k + i) --i;
        if (i < 0) return std::nullopt;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

std::optional<SolveResult> brute_force_impl(const Graph& g, Problem p,
                                            const ForcedAssignment& forced, bool allow_large) {
    if (g.order() > kBruteForceLimit && !allow_large)
        throw precondition_error("brute force refused for n > " +
                                 std::to_string(kBruteForceLimit) +
                                 " (pass allow_large to override)");
    MaskGraph m = to_masks(g);
    std::uint64_t in_mask = forced.forced_in.to_mask();
    std::uint64_t out_mask = forced.forced_out.to_mask();
    std::vector<int> free_ids;
    for (int v = 0; v < m.n; ++v)
        if (!(in_mask >> v & 1u) && !(out_mask >> v & 1u)) free_ids.push_back(v);

    std::uint64_t nodes = 0;
    auto ok = [&](std::uint64_t mask) {
        ++nodes;
        return mask_feasible(m, p, mask);
    };

    std::optional<std::uint64_t> found;
    if (p == Problem::beta) {
        for (int k = static_cast<int>(free_ids.size()); k >= 0 && !found; --k)
            found = first_k_subset(free_ids, k, in_mask, ok);
    } else {
        for (int k = 0; k <= static_cast<int>(free_ids.size()) && !found; ++k)
            found = first_k_subset(free_ids, k, in_mask, ok);
    }
    if (!found) return std::nullopt;
    SolveResult r;
    r.value = popcount(*found);
    r.witness = VertexSet::from_mask(m.n, *found);
    r.nodes_explored = nodes;
    r.method = Method::brute_force;
    return r;
}

// ---- branch and bound -------------------------------------------------------

// Minimum total dominating set, optionally with the co-independence side
// conditions (complement independent and nonempty).
struct DominationBnB {
    const MaskGraph& g;
    bool coi;
    int best = INT_MAX;
    std::uint64_t best_mask = 0;
    std::uint64_t nodes = 0;

    DominationBnB(const MaskGraph& graph, bool co_independent) : g(graph), coi(co_independent) {}

    bool propagate(std::uint64_t& in, std::uint64_t& out) {
        for (;;) {
            bool changed = false;
            std::uint64_t und = g.all & ~in & ~out;
            if (coi) {
                std::uint64_t forced = 0;
                for (std::uint64_t rest = out; rest;) {
                    int v = std::countr_zero(rest);
                    rest &= rest - 1;
                    if (g.adj[static_cast<size_t>(v)] & out) return false;
                    forced |= g.adj[static_cast<size_t>(v)] & und;
                }
                if (forced) {
                    in |= forced;
                    und &= ~forced;
                    changed = true;
                }
            }
            for (int v = 0; v < g.n; ++v) {
                std::uint64_t a = g.adj[static_cast<size_t>(v)];
                if (a & in) continue;
                std::uint64_t pool = a & und;
                if (!pool) return false;
                if ((pool & (pool - 1)) == 0) {
                    in |= pool;
                    und &= ~pool;
                    changed = true;
                }
            }
            if (!changed) return true;
        }
    }

    // Undominated vertices with pairwise disjoint candidate-dominator pools
    // each require a distinct further inclusion.
    int lower_bound(std::uint64_t in, std::uint64_t out) const {
        std::uint64_t und = g.all & ~in & ~out;
        std::uint64_t used = 0;
        int extra = 0;
        for (int v = 0; v < g.n; ++v) {
            std::uint64_t a = g.adj[static_cast<size_t>(v)];
            if (a & in) continue;
            std::uint64_t pool = a & und;
            if (pool & used) continue;
            used |= pool;
            ++extra;
        }
        return popcount(in) + extra;
    }

    void dfs(std::uint64_t in, std::uint64_t out) {
        ++nodes;
        if (!propagate(in, out)) return;
        if (lower_bound(in, out) >= best) return;
        std::uint64_t und = g.all & ~in & ~out;
        if (!und) {
            if (coi && out == 0) return;
            int value = popcount(in);
            if (value < best) {
                best = value;
                best_mask = in;
            }
            return;
        }
        std::uint64_t bit = und & (~und + 1);
        dfs(in | bit, out);
        dfs(in, out | bit);
    }
};

// Minimum vertex cover: excluded vertices must form an independent set.
struct CoverBnB {
    const MaskGraph& g;
    const std::vector<std::pair<int, int>>& edges;
    int best = INT_MAX;
    std::uint64_t best_mask = 0;
    std::uint64_t nodes = 0;

    CoverBnB(const MaskGraph& graph, const std::vector<std::pair<int, int>>& edge_list)
        : g(graph), edges(edge_list) {}

    bool propagate(std::uint64_t& in, std::uint64_t out) {
        for (std::uint64_t rest = out; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (g.adj[static_cast<size_t>(v)] & out) return false;
            in |= g.adj[static_cast<size_t>(v)] & ~out;
        }
        return true;
    }

    // Greedy matching among edges not yet covered.
    int lower_bound(std::uint64_t in, std::uint64_t out) const {
        std::uint64_t decided = in | out;
        std::uint64_t used = 0;
        int extra = 0;
        for (auto [u, v] : edges) {
            std::uint64_t pair_mask = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
            if (pair_mask & decided) continue;  // covered or resolved by propagation
            if (pair_mask & used) continue;
            used |= pair_mask;
            ++extra;
        }
        return popcount(in) + extra;
    }

    void dfs(std::uint64_t in, std::uint64_t out) {
        ++nodes;
        if (!propagate(in, out)) return;
        if (in & out) return;
        if (lower_bound(in, out) >= best) return;
        std::uint64_t und = g.all & ~in & ~out;
        if (!und) {
            int value = popcount(in);
            if (value < best) {
                best = value;
                best_mask = in;
            }
            return;
        }
        std::uint64_t bit = und & (~und + 1);
        dfs(in | bit, out);
        dfs(in, out | bit);
    }
};

// Maximum independent set.
struct IndependentBnB {
    const MaskGraph& g;
    int best = -1;
    std::uint64_t best_mask = 0;
    std::uint64_t nodes = 0;

    explicit IndependentBnB(const MaskGraph& graph) : g(graph) {}

    void dfs(std::uint64_t in, std::uint64_t out) {
        ++nodes;
        for (std::uint64_t rest = in; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (g.adj[static_cast<size_t>(v)] & in) return;
            out |= g.adj[static_cast<size_t>(v)] & ~in;
        }
        std::uint64_t und = g.all & ~in & ~out;
        if (popcount(in) + popcount(und) <= best) return;
        if (!und) {
            int value = popcount(in);
            if (value > best) {
                best = value;
                best_mask = in;
            }
            return;
        }
        std::uint64_t bit = und & (~und + 1);
        dfs(in | bit, out);
        dfs(in, out | bit);
    }
};

// Greedy maximal independent set in vertex-id order.
std::uint64_t greedy_independent(const MaskGraph& g) {
    std::uint64_t ind = 0;
    for (int v = 0; v < g.n; ++v)
        if ((g.adj[static_cast<size_t>(v)] & ind) == 0) ind |= std::uint64_t{1} << v;
    return ind;
}

// Feasible TC-ID set used to seed the branch and bound: complement of a
// maximal independent set, repaired until every member has a member neighbor.
std::optional<std::uint64_t> greedy_tcid(const MaskGraph& g) {
    std::uint64_t ind = greedy_independent(g);
    std::uint64_t d = g.all & ~ind;
    for (;;) {
        bool moved = false;
        for (std::uint64_t rest = d; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (g.adj[static_cast<size_t>(v)] & d) continue;
            std::uint64_t nbrs = g.adj[static_cast<size_t>(v)];
            if (!nbrs) return std::nullopt;
            std::uint64_t pick = nbrs & (~nbrs + 1);
            ind &= ~pick;
            d |= pick;
            moved = true;
        }
        if (!moved) break;
    }
    if (ind == 0) return std::nullopt;
    if (!mask_total_dominating(g, d) || !mask_independent(g, ind)) return std::nullopt;
    return d;
}

std::optional<SolveResult> bnb_impl(const Graph& g, Problem p, const ForcedAssignment& forced) {
    MaskGraph m = to_masks(g);
    std::uint64_t in0 = forced.forced_in.to_mask();
    std::uint64_t out0 = forced.forced_out.to_mask();
    bool unconstrained = in0 == 0 && out0 == 0;
    SolveResult r;
    r.method = Method::branch_and_bound;

    switch (p) {
        case Problem::gamma_t:
        case Problem::gamma_tcoi: {
            DominationBnB solver(m, p == Problem::gamma_tcoi);
            if (unconstrained) {
                if (p == Problem::gamma_tcoi) {
                    if (auto seed = greedy_tcid(m)) {
                        solver.best = popcount(*seed);
                        solver.best_mask = *seed;
                    }
                } else if (mask_total_dominating(m, m.all)) {
                    solver.best = m.n;
                    solver.best_mask = m.all;
                }
            }
            solver.dfs(in0, out0);
            if (solver.best == INT_MAX) return std::nullopt;
            r.value = solver.best;
            r.witness = VertexSet::from_mask(m.n, solver.best_mask);
            r.nodes_explored = solver.nodes;
            return r;
        }
        case Problem::alpha: {
            CoverBnB solver(m, g.edges());
            if (unconstrained) {
                std::uint64_t cover = m.all & ~greedy_independent(m);
                solver.best = popcount(cover);
                solver.best_mask = cover;
                if (g.size() == 0) {
                    solver.best = 0;
                    solver.best_mask = 0;
                }
            }
            solver.dfs(in0, out0);
            if (solver.best == INT_MAX) return std::nullopt;
            r.value = solver.best;
            r.witness = VertexSet::from_mask(m.n, solver.best_mask);
            r.nodes_explored = solver.nodes;
            return r;
        }
        case Problem::beta: {
            IndependentBnB solver(m);
            if (unconstrained) {
                std::uint64_t ind = greedy_independent(m);
                solver.best = popcount(ind);
                solver.best_mask = ind;
            }
            solver.dfs(in0, out0);
            if (solver.best < 0) return std::nullopt;
            r.value = solver.best;
            r.witness = VertexSet::from_mask(m.n, solver.best_mask);
            r.nodes_explored = solver.nodes;
            return r;
        }
    }
    return std::nullopt;
}

}  // namespace

SolveResult gamma_t(const Graph& g) {
    if (g.order() < 2) throw precondition_error("gamma_t requires n >= 2");
    require_no_isolated(g, "total domination");
    auto r = bnb_impl(g, Problem::gamma_t, ForcedAssignment::none(g.order()));
    if (!r) throw std::logic_error("gamma_t: no total dominating set on isolate-free graph");
    return checked(g, Problem::gamma_t, std::move(*r));
}

SolveResult gamma_tcoi(const Graph& g) {
    require_no_isolated(g, "total co-independent domination");
    if (g.order() < 3 || all_components_are_p2(g))
        throw infeasible_error(
            "total co-independent domination is infeasible: every minimum total dominating "
            "set would have an empty complement (P2-type input)");
    auto components = connected_components(g);
    if (components.size() == 1) {
        auto r = bnb_impl(g, Problem::gamma_tcoi, ForcedAssignment::none(g.order()));
        if (!r) throw std::logic_error("gamma_tcoi: connected graph with n >= 3 must be feasible");
        return checked(g, Problem::gamma_tcoi, std::move(*r));
    }
    // Component decomposition: P2 components contribute their gamma_t (both
    // vertices), larger components their gamma_tcoi.
    SolveResult total;
    total.method = Method::branch_and_bound;
    total.witness = VertexSet(g.order());
    for (const auto& comp : components) {
        std::vector<int> ids = comp.to_vector();
        if (ids.size() == 2) {
            total.value += 2;
            total.witness.insert(ids[0]);
            total.witness.insert(ids[1]);
            continue;
        }
        Graph sub = induced_subgraph(g, comp);
        auto r = bnb_impl(sub, Problem::gamma_tcoi, ForcedAssignment::none(sub.order()));
        if (!r) throw std::logic_error("gamma_tcoi: component of order >= 3 must be feasible");
        total.value += r->value;
        total.nodes_explored += r->nodes_explored;
        for (int v : r->witness.to_vector()) total.witness.insert(ids[static_cast<size_t>(v)]);
    }
    return checked(g, Problem::gamma_tcoi, std::move(total));
}

SolveResult alpha(const Graph& g) {
    if (g.order() == 0) {
        SolveResult r;
        r.method = Method::branch_and_bound;
        return r;
    }
    auto r = bnb_impl(g, Problem::alpha, ForcedAssignment::none(g.order()));
    if (!r) throw std::logic_error("alpha: vertex cover always exists");
    return checked(g, Problem::alpha, std::move(*r));
}

SolveResult beta(const Graph& g) {
    if (g.order() == 0) {
        SolveResult r;
        r.method = Method::branch_and_bound;
        return r;
    }
    auto r = bnb_impl(g, Problem::beta, ForcedAssignment::none(g.order()));
    if (!r) throw std::logic_error("beta: independent set always exists");
    // Gallai: alpha + beta = n, asserted on every call.
    if (alpha(g).value + r->value != g.order())
        throw std::logic_error("beta: Gallai identity alpha + beta = n violated");
    return checked(g, Problem::beta, std::move(*r));
}

std::optional<SolveResult> solve_constrained(const Graph& g, Problem problem,
                                             const ForcedAssignment& forced) {
    if (forced.forced_in.universe() != g.order())
        throw invalid_input_error("forced assignment universe does not match graph order");
    if (problem == Problem::gamma_t || problem == Problem::gamma_tcoi)
        require_no_isolated(g, problem_name(problem));
    auto r = bnb_impl(g, problem, forced);
    if (r) return checked(g, problem, std::move(*r));
    return std::nullopt;
}

SolveResult solve_brute_force(const Graph& g, Problem problem, bool allow_large) {
    if (problem == Problem::gamma_t) {
        if (g.order() < 2) throw precondition_error("gamma_t requires n >= 2");
        require_no_isolated(g, "total domination");
    }
    if (problem == Problem::gamma_tcoi) {
        require_no_isolated(g, "total co-independent domination");
        if (g.order() < 3 || all_components_are_p2(g))
            throw infeasible_error("total co-independent domination is infeasible (P2-type input)");
    }
    auto r = brute_force_impl(g, problem, ForcedAssignment::none(g.order()), allow_large);
    if (!r) throw std::logic_error("brute force failed on a feasible instance");
    return checked(g, problem, std::move(*r));
}

std::optional<SolveResult> solve_brute_force_constrained(const Graph& g, Problem problem,
                                                         const ForcedAssignment& forced,
                                                         bool allow_large) {
    if (forced.forced_in.universe() != g.order())
        throw invalid_input_error("forced assignment universe does not match graph order");
    auto r = brute_force_impl(g, problem, forced, allow_large);
    if (r) return checked(g, problem, std::move(*r));
    return std::nullopt;
}

// ---- rooted tree dynamic programs -------------------------------------------

namespace {

constexpr int kInf = INT_MAX / 4;

// Rooted orientation with iterative post-order.
struct Rooted {
    std::vector<int> parent, order;                 // order = post-order
    std::vector<std::vector<int>> children;
};

Rooted root_tree(const Graph& t, int root = 0) {
    int n = t.order();
    Rooted r;
    r.parent.assign(static_cast<size_t>(n), -1);
    r.children.assign(static_cast<size_t>(n), {});
    std::vector<int> stack{root};
    std::vector<int> pre;
    std::vector<bool> seen(static_cast<size_t>(n), false);
    seen[static_cast<size_t>(root)] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        pre.push_back(v);
        for (int u : t.neighbors(v))
            if (!seen[static_cast<size_t>(u)]) {
                seen[static_cast<size_t>(u)] = true;
                r.parent[static_cast<size_t>(u)] = v;
                r.children[static_cast<size_t>(v)].push_back(u);
                stack.push_back(u);
            }
    }
    r.order.assign(pre.rbegin(), pre.rend());
    return r;
}

// Total domination states: 0 in+dominated, 1 in+pending, 2 out+dominated,
// 3 out+pending ("pending" = no dominating neighbor seen in the subtree yet).
// For the co-independent variant the state is doubled with a subtree
// "has an excluded vertex" bit: s = status*2 + hasout.

struct DpTables {
    // prefix[v][i] = state costs after merging the first i children of v.
    std::vector<std::vector<std::array<int, 8>>> prefix;
    int states = 4;
};

template <bool Coi>
std::array<int, 8> initial_state(int /*v*/) {
    std::array<int, 8> dp;
    dp.fill(kInf);
    if constexpr (Coi) {
        dp[1 * 2 + 0] = 1;  // in, pending, no excluded vertex below
        dp[3 * 2 + 1] = 0;  // out, pending
    } else {
        dp[1] = 1;
        dp[3] = 0;
    }
    return dp;
}

// State reached when a vertex in accumulated state sa absorbs a child in
// state sc, or -1 when the combination is forbidden.
template <bool Coi>
int merge_pair(int sa, int sc) {
    int status_v = Coi ? sa / 2 : sa;
    int status_c = Coi ? sc / 2 : sc;
    bool v_in = status_v == 0 || status_v == 1;
    bool c_in = status_c == 0 || status_c == 1;
    if (!v_in) {
        // An excluded vertex cannot settle pending children; with the
        // co-independence constraint its children may not be excluded either.
        if constexpr (Coi) {
            if (status_c != 0) return -1;
        } else {
            if (status_c != 0 && status_c != 2) return -1;
        }
    }
    int new_status = status_v;
    if (c_in && (status_v == 1 || status_v == 3)) new_status = status_v - 1;
    if constexpr (Coi) {
        int nh = (sa % 2) | (sc % 2);
        return new_status * 2 + nh;
    }
    return new_status;
}

template <bool Coi>
std::array<int, 8> merge_child(const std::array<int, 8>& acc, const std::array<int, 8>& child) {
    std::array<int, 8> out;
    out.fill(kInf);
    int states = Coi ? 8 : 4;
    for (int sa = 0; sa < states; ++sa) {
        if (acc[static_cast<size_t>(sa)] >= kInf) continue;
        for (int sc = 0; sc < states; ++sc) {
            if (child[static_cast<size_t>(sc)] >= kInf) continue;
            int key = merge_pair<Coi>(sa, sc);
            if (key < 0) continue;
            int cost = acc[static_cast<size_t>(sa)] + child[static_cast<size_t>(sc)];
            if (cost < out[static_cast<size_t>(key)]) out[static_cast<size_t>(key)] = cost;
        }
    }
    return out;
}

template <bool Coi>
std::pair<int, VertexSet> run_tree_dp(const Graph& t) {
    int n = t.order();
    Rooted r = root_tree(t);
    DpTables tables;
    tables.states = Coi ? 8 : 4;
    tables.prefix.assign(static_cast<size_t>(n), {});
    std::vector<std::array<int, 8>> dp(static_cast<size_t>(n));
    for (int v : r.order) {
        auto acc = initial_state<Coi>(v);
        auto& pref = tables.prefix[static_cast<size_t>(v)];
        pref.push_back(acc);
        for (int c : r.children[static_cast<size_t>(v)]) {
            acc = merge_child<Coi>(acc, dp[static_cast<size_t>(c)]);
            pref.push_back(acc);
        }
        dp[static_cast<size_t>(v)] = acc;
    }
    int root = r.order.back();
    int best = kInf, best_state = -1;
    for (int status : {0, 2}) {
        int key = Coi ? status * 2 + 1 : status;
        int cost = dp[static_cast<size_t>(root)][static_cast<size_t>(key)];
        if (cost < best) {
            best = cost;
            best_state = key;
        }
    }
    if (best >= kInf) return {kInf, VertexSet(n)};

    // Reconstruct: walk down assigning each vertex the state used by the
    // optimal composition, unwinding the child merges right to left.
    VertexSet witness(n);
    std::vector<int> state_of(static_cast<size_t>(n), -1);
    state_of[static_cast<size_t>(root)] = best_state;
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
        int v = *it;
        int sv = state_of[static_cast<size_t>(v)];
        const auto& pref = tables.prefix[static_cast<size_t>(v)];
        const auto& kids = r.children[static_cast<size_t>(v)];
        int cur = sv;
        for (int i = static_cast<int>(kids.size()) - 1; i >= 0; --i) {
            int c = kids[static_cast<size_t>(i)];
            bool found = false;
            int states = Coi ? 8 : 4;
            for (int sa = 0; sa < states && !found; ++sa) {
                int acc_cost = pref[static_cast<size_t>(i)][static_cast<size_t>(sa)];
                if (acc_cost >= kInf) continue;
                for (int sc = 0; sc < states && !found; ++sc) {
                    int child_cost = dp[static_cast<size_t>(c)][static_cast<size_t>(sc)];
                    if (child_cost >= kInf) continue;
                    if (merge_pair<Coi>(sa, sc) != cur) continue;
                    if (acc_cost + child_cost !=
                        pref[static_cast<size_t>(i) + 1][static_cast<size_t>(cur)])
                        continue;
                    state_of[static_cast<size_t>(c)] = sc;
                    cur = sa;
                    found = true;
                }
            }
            if (!found) throw std::logic_error("tree dp reconstruction failed");
        }
        int status = Coi ? sv / 2 : sv;
        if (status == 0 || status == 1) witness.insert(v);
    }
    return {best, witness};
}

}  // namespace

SolveResult tree_gamma_t(const Graph& t) {
    if (!is_tree(t)) throw precondition_error("tree_gamma_t requires a tree");
    if (t.order() < 2) throw precondition_error("tree_gamma_t requires n >= 2");
    auto [value, witness] = run_tree_dp<false>(t);
    if (value >= kInf) throw std::logic_error("tree_gamma_t: infeasible on a tree with n >= 2");
    SolveResult r;
    r.value = value;
    r.witness = std::move(witness);
    r.nodes_explored = static_cast<std::uint64_t>(t.order());
    r.method = Method::tree_dp;
    return checked(t, Problem::gamma_t, std::move(r));
}

SolveResult tree_gamma_tcoi(const Graph& t) {
    if (!is_tree(t)) throw precondition_error("tree_gamma_tcoi requires a tree");
    if (t.order() < 3)
        throw infeasible_error("total co-independent domination is infeasible for trees with n < 3");
    auto [value, witness] = run_tree_dp<true>(t);
    if (value >= kInf) throw std::logic_error("tree_gamma_tcoi: infeasible on a tree with n >= 3");
    SolveResult r;
    r.value = value;
    r.witness = std::move(witness);
    r.nodes_explored = static_cast<std::uint64_t>(t.order());
    r.method = Method::tree_dp;
    return checked(t, Problem::gamma_tcoi, std::move(r));
}

bool in_some_min_tcid_set(const Graph& tree, int v) {
    if (!is_tree(tree)) throw precondition_error("in_some_min_tcid_set requires a tree");
    if (v < 0 || v >= tree.order()) throw invalid_input_error("vertex out of range");
    int optimum = tree_gamma_tcoi(tree).value;
    ForcedAssignment forced(VertexSet(tree.order(), {v}), VertexSet(tree.order()));
    auto constrained = solve_constrained(tree, Problem::gamma_tcoi, forced);
    return constrained && constrained->value == optimum;
}

VertexSet canonical_leaf_free_tcid_set(const Graph& tree) {
    if (!is_tree(tree)) throw precondition_error("canonical_leaf_free_tcid_set requires a tree");
    if (tree.order() > 32)
        throw precondition_error("canonical_leaf_free_tcid_set guarded to n <= 32");
    int optimum = tree_gamma_tcoi(tree).value;
    MaskGraph m = to_masks(tree);
    VertexSet leaves(tree.order());
    for (int v = 0; v < tree.order(); ++v)
        if (tree.degree(v) == 1) leaves.insert(v);
    std::vector<int> non_leaves;
    for (int v = 0; v < tree.order(); ++v)
        if (!leaves.contains(v)) non_leaves.push_back(v);
    auto feasible = [&](std::uint64_t mask) { return mask_feasible(m, Problem::gamma_tcoi, mask); };
    if (auto found = first_k_subset(non_leaves, optimum, 0, feasible))
        return VertexSet::from_mask(tree.order(), *found);
    std::vector<int> all_ids(static_cast<size_t>(tree.order()));
    for (int v = 0; v < tree.order(); ++v) all_ids[static_cast<size_t>(v)] = v;
    if (auto found = first_k_subset(all_ids, optimum, 0, feasible))
        return VertexSet::from_mask(tree.order(), *found);
    throw std::logic_error("canonical_leaf_free_tcid_set: no minimum set found");
}

}  // namespace tcoi

#include "tcoi/tree_theory.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "tcoi/iso.hpp"
#include "tcoi/solvers.hpp"

namespace tcoi {

const char* tree_op_name(TreeOp op) {
    switch (op) {
        case TreeOp::F1: return "F1";
        case TreeOp::F2: return "F2";
        case TreeOp::F3: return "F3";
        case TreeOp::F4: return "F4";
        case TreeOp::F5: return "F5";
    }
    return "?";
}

namespace {

VertexSet compute_l3(const Graph& t) {
    auto classes = tree_vertex_classes(t);
    VertexSet l3(t.order());
    auto leaves = classes.leaves.to_vector();
    for (int h : leaves) {
        auto dist = distances_from(t, h);
        for (int other : leaves)
            if (other != h && dist[static_cast<size_t>(other)] == 3) {
                l3.insert(h);
                break;
            }
    }
    return l3;
}

}  // namespace

TcidContext build_context(const Graph& t) {
    if (!is_tree(t)) throw precondition_error("build_context requires a tree");
    if (t.order() < 3)
        throw precondition_error("build_context requires n >= 3");
    auto classes = tree_vertex_classes(t);
    if (classes.supports.count() < 2)
        throw precondition_error(
            "build_context requires at least two support vertices (stars are excluded)");
    TcidContext ctx;
    ctx.tree = t;
    ctx.d_set = canonical_leaf_free_tcid_set(t);
    ctx.l3 = compute_l3(t);
    ctx.v23 = VertexSet(t.order());
    ctx.v6 = VertexSet(t.order());
    std::vector<std::vector<int>> dist;
    dist.reserve(static_cast<size_t>(t.order()));
    for (int v = 0; v < t.order(); ++v) dist.push_back(distances_from(t, v));
    auto leaves = classes.leaves.to_vector();
    for (int v = 0; v < t.order(); ++v) {
        if (ctx.d_set.contains(v)) continue;
        for (int h : leaves) {
            int d = dist[static_cast<size_t>(v)][static_cast<size_t>(h)];
            if (d == 2 || d == 3) {
                ctx.v23.insert(v);
                break;
            }
        }
    }
    for (int v = 0; v < t.order(); ++v) {
        if (ctx.d_set.contains(v)) continue;
        for (int u : ctx.v23.to_vector())
            if (dist[static_cast<size_t>(v)][static_cast<size_t>(u)] == 3) {
                ctx.v6.insert(v);
                break;
            }
    }
    return ctx;
}

std::string TreeOpSequence::to_text() const {
    std::ostringstream out;
    out << "base P4\n";
    for (const auto& s : steps) out << tree_op_name(s.op) << " " << s.anchor << "\n";
    return out.str();
}

TreeOpSequence TreeOpSequence::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string word;
    if (!(in >> word) || word != "base" || !(in >> word) || word != "P4")
        throw invalid_input_error("tree op sequence must start with 'base P4'");
    TreeOpSequence seq;
    while (in >> word) {
        TreeOpStep step;
        if (word == "F1") step.op = TreeOp::F1;
        else if (word == "F2") step.op = TreeOp::F2;
        else if (word == "F3") step.op = TreeOp::F3;
        else if (word == "F4") step.op = TreeOp::F4;
        else if (word == "F5") step.op = TreeOp::F5;
        else throw invalid_input_error("unknown tree operation: " + word);
        if (!(in >> step.anchor)) throw invalid_input_error("missing anchor for " + word);
        seq.steps.push_back(step);
    }
    return seq;
}

Graph apply_tree_op(const Graph& t, TreeOp op, int anchor) {
    if (!is_tree(t)) throw precondition_error("tree operations require a tree");
    if (anchor < 0 || anchor >= t.order()) throw invalid_input_error("anchor out of range");
    switch (op) {
        case TreeOp::F1:
            if (!in_some_min_tcid_set(t, anchor))
                throw precondition_error(
                    "F1 anchor must belong to some minimum total co-independent dominating set");
            break;
        case TreeOp::F2:
        case TreeOp::F3:
            if (!compute_l3(t).contains(anchor))
                throw precondition_error(std::string(tree_op_name(op)) +
                                         " anchor must be a leaf at distance three from "
                                         "another leaf");
            break;
        case TreeOp::F4:
            if (!build_context(t).v23.contains(anchor))
                throw precondition_error(
                    "F4 anchor must lie outside the canonical set within distance 2..3 of a leaf");
            break;
        case TreeOp::F5:
            if (!build_context(t).v6.contains(anchor))
                throw precondition_error(
                    "F5 anchor must lie outside the canonical set at distance three from a "
                    "V23 vertex");
            break;
    }
    int n = t.order();
    std::vector<std::pair<int, int>> edges = t.edges();
    switch (op) {
        case TreeOp::F1:
        case TreeOp::F2:
            edges.emplace_back(anchor, n);
            return Graph(n + 1, std::move(edges));
        case TreeOp::F3:
            edges.emplace_back(anchor, n);
            edges.emplace_back(n, n + 1);
            return Graph(n + 2, std::move(edges));
        case TreeOp::F4:
        case TreeOp::F5:
            edges.emplace_back(anchor, n);
            edges.emplace_back(n, n + 1);
            edges.emplace_back(n + 1, n + 2);
            return Graph(n + 3, std::move(edges));
    }
    throw std::logic_error("unreachable tree op");
}

Graph replay_sequence(const TreeOpSequence& seq) {
    Graph g = make_path(4);
    for (const auto& s : seq.steps) g = apply_tree_op(g, s.op, s.anchor);
    return g;
}

bool is_in_t_gamma_t(const Graph& t) {
    if (!is_tree(t)) throw precondition_error("is_in_t_gamma_t requires a tree");
    if (t.order() < 3 || is_star(t))
        throw precondition_error(
            "the tree characterization assumes at least two supports; stars and P2 are "
            "excluded");
    return tree_gamma_tcoi(t).value == tree_gamma_t(t).value;
}

int tree_op_value_delta(TreeOp op) {
    switch (op) {
        case TreeOp::F1: return 0;
        case TreeOp::F2: return 1;
        case TreeOp::F3:
        case TreeOp::F4:
        case TreeOp::F5: return 2;
    }
    return 0;
}

std::vector<FamilyMember> generate_family_f(int max_n) {
    if (max_n < 4) throw precondition_error("generate_family_f requires max_n >= 4");
    std::vector<FamilyMember> members;
    std::vector<int> member_value;  // shared gamma value (members keep equality)
    std::unordered_set<std::string> seen;
    members.push_back({make_path(4), {}});
    member_value.push_back(tree_gamma_t(make_path(4)).value);
    seen.insert(canonical_tree_code(make_path(4)));
    for (size_t next = 0; next < members.size(); ++next) {
        // members grows during iteration; breadth-first by discovery order
        Graph g = members[next].tree;
        TreeOpSequence seq = members[next].sequence;
        int value = member_value[next];
        if (g.order() >= max_n) continue;
        TcidContext ctx = build_context(g);
        auto try_extend = [&](TreeOp op, int anchor, int added) {
            if (g.order() + added > max_n) return;
            Graph bigger = apply_tree_op(g, op, anchor);
            // Each growth step must move both domination numbers by the
            // operation's exact delta; extensions breaking the equality are
            // not family members even when the anchor sets admit them.
            int expected = value + tree_op_value_delta(op);
            if (tree_gamma_t(bigger).value != expected) return;
            if (tree_gamma_tcoi(bigger).value != expected) return;
            std::string code = canonical_tree_code(bigger);
            if (!seen.insert(code).second) return;
            TreeOpSequence extended = seq;
            extended.steps.push_back({op, anchor});
            members.push_back({std::move(bigger), std::move(extended)});
            member_value.push_back(expected);
        };
        for (int v = 0; v < g.order(); ++v)
            if (in_some_min_tcid_set(g, v)) try_extend(TreeOp::F1, v, 1);
        for (int v : ctx.l3.to_vector()) {
            try_extend(TreeOp::F2, v, 1);
            try_extend(TreeOp::F3, v, 2);
        }
        for (int v : ctx.v23.to_vector()) try_extend(TreeOp::F4, v, 3);
        for (int v : ctx.v6.to_vector()) try_extend(TreeOp::F5, v, 3);
    }
    std::stable_sort(members.begin(), members.end(),
                     [](const FamilyMember& a, const FamilyMember& b) {
                         return a.tree.order() < b.tree.order();
                     });
    return members;
}

// ---- free tree enumeration -----------------------------------------------------

std::vector<Graph> enumerate_free_trees(int n) {
    if (n < 1 || n > 18) throw precondition_error("enumerate_free_trees guarded to 1 <= n <= 18");
    std::vector<Graph> out;
    if (n == 1) return {Graph(1)};
    if (n == 2) return {make_path(2)};
    // Beyer-Hedetniemi level sequences enumerate every rooted tree once; free
    // trees are the distinct center-rooted codes among them.
    std::vector<int> level(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) level[static_cast<size_t>(i)] = i + 1;
    std::unordered_set<std::string> seen;
    for (;;) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i < n; ++i) {
            for (int j = i - 1; j >= 0; --j)
                if (level[static_cast<size_t>(j)] == level[static_cast<size_t>(i)] - 1) {
                    edges.emplace_back(j, i);
                    break;
                }
        }
        Graph t(n, std::move(edges));
        if (seen.insert(canonical_tree_code(t)).second) out.push_back(t);

        int p = -1;
        for (int i = n - 1; i >= 0; --i)
            if (level[static_cast<size_t>(i)] > 2) {
                p = i;
                break;
            }
        if (p < 0) break;
        int q = -1;
        for (int i = p - 1; i >= 0; --i)
            if (level[static_cast<size_t>(i)] == level[static_cast<size_t>(p)] - 1) {
                q = i;
                break;
            }
        for (int i = p; i < n; ++i)
            level[static_cast<size_t>(i)] = level[static_cast<size_t>(i - (p - q))];
    }
    return out;
}

// ---- recognizer ------------------------------------------------------------------

namespace {

struct Peel {
    std::vector<int> removed;  // ids in the current tree, attachment order
    int anchor = -1;           // id in the current tree; survives removal
    TreeOp hint = TreeOp::F1;
};

// The unique path between two vertices of a tree.
std::vector<int> tree_path(const Graph& t, int from, int to) {
    std::vector<int> parent(static_cast<size_t>(t.order()), -2);
    std::vector<int> stack{from};
    parent[static_cast<size_t>(from)] = -1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == to) break;
        for (int u : t.neighbors(v))
            if (parent[static_cast<size_t>(u)] == -2) {
                parent[static_cast<size_t>(u)] = v;
                stack.push_back(u);
            }
    }
    std::vector<int> path;
    for (int v = to; v != -1; v = parent[static_cast<size_t>(v)]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

int min_leaf_neighbor(const Graph& t, const VertexSet& leaves, int v) {
    for (int u : t.neighbors(v))
        if (leaves.contains(u)) return u;
    return -1;
}

// Case analysis of the peeling argument; nullopt when the structure does not
// match any case (callers treat that as non-membership and the exhaustive
// sweeps flag it).
std::optional<Peel> choose_peel(const Graph& t) {
    auto classes = tree_vertex_classes(t);
    const auto& L = classes.leaves;
    const auto& S = classes.supports;
    const auto& SS = classes.semi_supports;

    if (S.count() < L.count()) {  // some support carries two leaves
        for (int v : S.to_vector()) {
            int leaf_count = 0;
            for (int u : t.neighbors(v))
                if (L.contains(u)) ++leaf_count;
            if (leaf_count >= 2) return Peel{{min_leaf_neighbor(t, L, v)}, v, TreeOp::F1};
        }
        return std::nullopt;
    }

    auto support_neighbors = [&](int v) {
        std::vector<int> out;
        for (int u : t.neighbors(v))
            if (S.contains(u)) out.push_back(u);
        return out;
    };

    if (SS.count() == 0) {  // every vertex is a support or a leaf
        for (int v = 0; v < t.order(); ++v)
            if (!L.contains(v) && !S.contains(v)) return std::nullopt;
        for (int s : S.to_vector())
            if (support_neighbors(s).size() == 1)
                return Peel{{min_leaf_neighbor(t, L, s)}, s, TreeOp::F2};
        return std::nullopt;
    }

    // Deepest leaf pair with a semi-support at distance two from one end.
    int best_d = -1, best_h = -1, best_hp = -1, best_v = -1;
    std::vector<int> best_path;
    auto leaves = L.to_vector();
    for (int h : leaves) {
        auto dist = distances_from(t, h);
        for (int hp : leaves) {
            if (hp == h) continue;
            int d = dist[static_cast<size_t>(hp)];
            if (d < 2) continue;
            auto path = tree_path(t, h, hp);
            int v = path[2];
            if (!SS.contains(v)) continue;
            if (d > best_d || (d == best_d && (h < best_h || (h == best_h && hp < best_hp)))) {
                best_d = d;
                best_h = h;
                best_hp = hp;
                best_v = v;
                best_path = path;
            }
        }
    }
    if (best_d < 0) return std::nullopt;
    int h = best_h, v = best_v;
    int s = best_path[1];

    auto s_supports = support_neighbors(s);
    if (!s_supports.empty()) {
        // Follow the support chain as far as it goes and peel its last leaf;
        // with a single link the leaf next to s itself comes off.
        int prev = s, cur = s_supports[0];
        int chain_len = 1;
        for (;;) {
            std::vector<int> next;
            for (int u : support_neighbors(cur))
                if (u != prev) next.push_back(u);
            if (next.empty()) break;
            prev = cur;
            cur = next[0];
            ++chain_len;
        }
        if (s_supports.size() == 1 && chain_len == 1)
            return Peel{{min_leaf_neighbor(t, L, s)}, s, TreeOp::F1};
        int leaf = min_leaf_neighbor(t, L, cur);
        if (leaf < 0) return std::nullopt;
        return Peel{{leaf}, cur, TreeOp::F2};
    }

    // N(s) has no supports: the peel removes h, (h,s) or (h,s,v) depending on
    // where the path continues.
    if (t.degree(s) != 2) return std::nullopt;
    auto v_supports = support_neighbors(v);
    if (v_supports.size() > 1) return Peel{{h}, s, TreeOp::F2};
    if (static_cast<int>(best_path.size()) < 4) return std::nullopt;
    int u1 = best_path[3];

    VertexSet d = canonical_leaf_free_tcid_set(t);
    if (d.contains(u1)) {
        if (min_leaf_neighbor(t, L, u1) >= 0) return Peel{{h}, s, TreeOp::F2};
        return Peel{{s, h}, v, TreeOp::F3};
    }
    if (t.degree(u1) >= 3) return Peel{{v, s, h}, u1, TreeOp::F4};

    // Path continues through u2; whether a leaf certificate sits next to u2's
    // private dominator decides the preferred operation.
    TreeOp hint = TreeOp::F4;
    int u2 = -1;
    for (int u : t.neighbors(u1))
        if (u != v) u2 = u;
    if (u2 >= 0 && d.contains(u2)) {
        for (int r = 0; r < t.order(); ++r) {
            if (!d.contains(r)) continue;
            int d_neighbors = 0;
            bool only_u2 = false;
            for (int w : t.neighbors(r))
                if (d.contains(w)) {
                    ++d_neighbors;
                    only_u2 = w == u2;
                }
            if (d_neighbors == 1 && only_u2) {
                bool leaf_next_to_r = false;
                for (int w : t.neighbors(r))
                    if (w != u2 && L.contains(w)) leaf_next_to_r = true;
                hint = leaf_next_to_r ? TreeOp::F4 : TreeOp::F5;
                break;
            }
        }
    }
    return Peel{{v, s, h}, u1, hint};
}

std::optional<TreeOp> first_valid_op(const Graph& base, int anchor, TreeOp hint,
                                     size_t limb_size) {
    std::vector<TreeOp> candidates;
    if (limb_size == 1) {
        candidates = hint == TreeOp::F2 ? std::vector<TreeOp>{TreeOp::F2, TreeOp::F1}
                                        : std::vector<TreeOp>{TreeOp::F1, TreeOp::F2};
    } else if (limb_size == 2) {
        candidates = {TreeOp::F3};
    } else {
        candidates = hint == TreeOp::F5 ? std::vector<TreeOp>{TreeOp::F5, TreeOp::F4}
                                        : std::vector<TreeOp>{TreeOp::F4, TreeOp::F5};
    }
    for (TreeOp op : candidates) {
        try {
            apply_tree_op(base, op, anchor);
            return op;
        } catch (const precondition_error&) {
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<TreeOpSequence> recognize_family_f(const Graph& t) {
    if (!is_tree(t)) throw precondition_error("recognize_family_f requires a tree");
    if (t.order() < 4 || is_star(t)) return std::nullopt;
    if (!is_in_t_gamma_t(t)) return std::nullopt;

    struct ChainEntry {
        std::vector<int> removed;      // ids in the larger tree
        std::vector<int> old_to_new;   // larger tree id -> smaller tree id
        int anchor_small = -1;         // anchor id in the smaller tree
        TreeOp hint = TreeOp::F1;
    };
    std::vector<ChainEntry> chain;
    Graph cur = t;
    while (cur.order() > 4) {
        auto peel = choose_peel(cur);
        if (!peel) return std::nullopt;
        VertexSet keep = VertexSet::full(cur.order());
        for (int v : peel->removed) keep.erase(v);
        std::vector<int> old_to_new;
        Graph smaller = induced_subgraph(cur, keep, &old_to_new);
        if (!is_tree(smaller) || is_star(smaller)) return std::nullopt;
        if (!is_in_t_gamma_t(smaller)) return std::nullopt;
        ChainEntry entry;
        entry.removed = peel->removed;
        entry.old_to_new = std::move(old_to_new);
        entry.anchor_small = entry.old_to_new[static_cast<size_t>(peel->anchor)];
        entry.hint = peel->hint;
        chain.push_back(std::move(entry));
        cur = std::move(smaller);
    }
    if (canonical_tree_code(cur) != canonical_tree_code(make_path(4))) return std::nullopt;

    // Forward replay: keep an isomorphism phi from the peel chain's trees onto
    // the replayed trees so recorded anchors stay valid.
    Graph replayed = make_path(4);
    std::vector<int> phi(4, -1);
    {
        int e0 = -1;
        for (int v = 0; v < 4 && e0 < 0; ++v)
            if (cur.degree(v) == 1) e0 = v;
        std::vector<int> order{e0};
        int prev = -1, at = e0;
        while (static_cast<int>(order.size()) < 4) {
            for (int u : cur.neighbors(at))
                if (u != prev) {
                    order.push_back(u);
                    prev = at;
                    at = u;
                    break;
                }
        }
        for (int i = 0; i < 4; ++i) phi[static_cast<size_t>(order[static_cast<size_t>(i)])] = i;
    }
    TreeOpSequence seq;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        int anchor = phi[static_cast<size_t>(it->anchor_small)];
        auto op = first_valid_op(replayed, anchor, it->hint, it->removed.size());
        if (!op) return std::nullopt;
        int before = replayed.order();
        replayed = apply_tree_op(replayed, *op, anchor);
        std::vector<int> next_phi(static_cast<size_t>(it->old_to_new.size()), -1);
        for (size_t x = 0; x < it->old_to_new.size(); ++x)
            if (it->old_to_new[x] >= 0)
                next_phi[x] = phi[static_cast<size_t>(it->old_to_new[x])];
        for (size_t j = 0; j < it->removed.size(); ++j)
            next_phi[static_cast<size_t>(it->removed[j])] = before + static_cast<int>(j);
        phi = std::move(next_phi);
        seq.steps.push_back({*op, anchor});
    }
    if (canonical_tree_code(replayed) != canonical_tree_code(t))
        throw std::logic_error("recognizer replay drifted from the input tree");
    return seq;
}

LeafDistanceReport check_leaf_distance_lemma(const Graph& t) {
    if (!is_in_t_gamma_t(t))
        throw precondition_error("the leaf distance lemma applies to trees with equal "
                                 "domination numbers");
    LeafDistanceReport rep;
    VertexSet d = canonical_leaf_free_tcid_set(t);
    for (int v = 0; v < t.order(); ++v) {
        if (d.contains(v) || t.degree(v) == 1) continue;
        auto dist = distances_from(t, v);
        bool near_leaf = false;
        for (int h = 0; h < t.order(); ++h)
            if (t.degree(h) == 1 && dist[static_cast<size_t>(h)] <= 3) near_leaf = true;
        if (!near_leaf) {
            rep.holds = false;
            rep.violations.push_back(v);
        }
    }
    return rep;
}

CharacterizationReport verify_characterization(int max_n) {
    if (max_n < 4 || max_n > 14)
        throw precondition_error("verify_characterization guarded to 4 <= max_n <= 14");
    CharacterizationReport rep;
    rep.max_n = max_n;
    rep.trees_per_order.assign(static_cast<size_t>(max_n) + 1, 0);
    rep.members_per_order.assign(static_cast<size_t>(max_n) + 1, 0);

    std::unordered_set<std::string> generated;
    for (const auto& member : generate_family_f(max_n))
        generated.insert(canonical_tree_code(member.tree));

    for (int n = 4; n <= max_n; ++n) {
        for (const Graph& t : enumerate_free_trees(n)) {
            rep.trees_per_order[static_cast<size_t>(n)]++;
            if (is_star(t)) {
                rep.stars_skipped++;
                continue;
            }
            std::string code = canonical_tree_code(t);
            bool by_value = is_in_t_gamma_t(t);
            auto seq = recognize_family_f(t);
            bool recognized = seq.has_value();
            bool in_generated = generated.count(code) > 0;
            if (by_value) rep.members_per_order[static_cast<size_t>(n)]++;
            if (!(by_value == recognized && recognized == in_generated)) {
                rep.disagreements.push_back({n, code, by_value, recognized, in_generated});
                continue;
            }
            if (recognized) {
                // Soundness of the emitted script: replay and compare.
                try {
                    Graph replayed = replay_sequence(*seq);
                    if (canonical_tree_code(replayed) != code)
                        rep.replay_failures.push_back(code);
                } catch (const std::exception&) {
                    rep.replay_failures.push_back(code);
                }
            }
            if (by_value) {
                auto leaf_rep = check_leaf_distance_lemma(t);
                if (!leaf_rep.holds) rep.leaf_distance_violations.push_back(code);
                VertexSet d = canonical_leaf_free_tcid_set(t);
                if (d.count() == tree_gamma_t(t).value) {
                    for (int v : d.to_vector()) {
                        bool private_in = false, private_out = false;
                        for (int u = 0; u < t.order(); ++u) {
                            int d_neighbors = 0;
                            bool v_is_only = false;
                            for (int w : t.neighbors(u))
                                if (d.contains(w)) {
                                    ++d_neighbors;
                                    v_is_only = w == v;
                                }
                            if (d_neighbors == 1 && v_is_only) {
                                if (d.contains(u)) private_in = true;
                                else private_out = true;
                            }
                        }
                        if (!private_in && !private_out) {
                            rep.private_neighbor_violations.push_back(code);
                            break;
                        }
                    }
                }
            }
        }
    }
    return rep;
}

}  // namespace tcoi

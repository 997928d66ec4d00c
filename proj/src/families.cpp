#include "tcoi/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "tcoi/iso.hpp"
#include "tcoi/solvers.hpp"

namespace tcoi {

StepResult apply_step(const Graph& g, const Step& s) {
    int n = g.order();
    StepResult out;
    switch (s.kind) {
        case StepKind::subdivide: {
            if (!g.has_edge(s.u, s.v))
                throw precondition_error("subdivision requires an existing edge (" +
                                         std::to_string(s.u) + "," + std::to_string(s.v) + ")");
            std::vector<std::pair<int, int>> edges;
            for (auto [a, b] : g.edges())
                if (!((a == std::min(s.u, s.v)) && (b == std::max(s.u, s.v))))
                    edges.emplace_back(a, b);
            int w = n;
            edges.emplace_back(s.u, w);
            edges.emplace_back(s.v, w);
            out.graph = Graph(n + 1, std::move(edges));
            out.old_to_new.resize(static_cast<size_t>(n));
            std::iota(out.old_to_new.begin(), out.old_to_new.end(), 0);
            out.new_vertices = {w};
            return out;
        }
        case StepKind::inflate: {
            int v = s.u, k = s.v;
            if (v < 0 || v >= n) throw precondition_error("inflation target out of range");
            if (k < 1) throw precondition_error("inflation size must be at least 1");
            if (g.degree(v) != 2)
                throw precondition_error("inflation requires the target to have degree exactly 2");
            int a = g.neighbors(v)[0], b = g.neighbors(v)[1];
            if (g.has_edge(a, b))
                throw precondition_error(
                    "inflation requires an induced path: the target's neighbors are adjacent");
            out.old_to_new.assign(static_cast<size_t>(n), -1);
            for (int x = 0; x < n; ++x)
                if (x != v) out.old_to_new[static_cast<size_t>(x)] = x < v ? x : x - 1;
            std::vector<std::pair<int, int>> edges;
            for (auto [p, q] : g.edges())
                if (p != v && q != v)
                    edges.emplace_back(out.old_to_new[static_cast<size_t>(p)],
                                       out.old_to_new[static_cast<size_t>(q)]);
            int na = out.old_to_new[static_cast<size_t>(a)];
            int nb = out.old_to_new[static_cast<size_t>(b)];
            for (int i = 0; i < k; ++i) {
                int fresh = n - 1 + i;
                edges.emplace_back(na, fresh);
                edges.emplace_back(nb, fresh);
                out.new_vertices.push_back(fresh);
            }
            out.graph = Graph(n - 1 + k, std::move(edges));
            return out;
        }
        case StepKind::add_pendants: {
            int v = s.u, t = s.v;
            if (v < 0 || v >= n) throw precondition_error("pendant target out of range");
            if (t < 0) throw precondition_error("pendant count must be non-negative");
            std::vector<std::pair<int, int>> edges = g.edges();
            for (int i = 0; i < t; ++i) {
                edges.emplace_back(v, n + i);
                out.new_vertices.push_back(n + i);
            }
            out.graph = Graph(n + t, std::move(edges));
            out.old_to_new.resize(static_cast<size_t>(n));
            std::iota(out.old_to_new.begin(), out.old_to_new.end(), 0);
            return out;
        }
    }
    throw std::logic_error("unreachable step kind");
}

BuildScript::BuildScript(BaseKind b, int param, std::vector<Step> s)
    : base(b), base_param(param), steps(std::move(s)) {
    replay();  // validates every step precondition
}

Graph BuildScript::base_graph() const {
    switch (base) {
        case BaseKind::star:
            if (base_param < 1) throw precondition_error("star base requires size >= 1");
            return make_star(base_param);
        case BaseKind::cycle6: return make_cycle(6);
        case BaseKind::path4: return make_path(4);
    }
    throw std::logic_error("unreachable base kind");
}

Graph BuildScript::replay() const {
    Graph g = base_graph();
    for (const Step& s : steps) g = apply_step(g, s).graph;
    return g;
}

std::string BuildScript::to_text() const {
    std::ostringstream out;
    switch (base) {
        case BaseKind::star: out << "base star " << base_param << "\n"; break;
        case BaseKind::cycle6: out << "base cycle6\n"; break;
        case BaseKind::path4: out << "base path4\n"; break;
    }
    for (const Step& s : steps) {
        switch (s.kind) {
            case StepKind::subdivide: out << "subdivide " << s.u << " " << s.v << "\n"; break;
            case StepKind::inflate: out << "inflate " << s.u << " " << s.v << "\n"; break;
            case StepKind::add_pendants: out << "pendants " << s.u << " " << s.v << "\n"; break;
        }
    }
    return out.str();
}

BuildScript BuildScript::from_text(const std::string& text) {
    std::istringstream in(text);
    std::string word;
    if (!(in >> word) || word != "base")
        throw invalid_input_error("build script must start with a 'base' line");
    BuildScript script;
    if (!(in >> word)) throw invalid_input_error("missing base kind");
    if (word == "star") {
        script.base = BaseKind::star;
        if (!(in >> script.base_param)) throw invalid_input_error("star base requires a size");
    } else if (word == "cycle6") {
        script.base = BaseKind::cycle6;
    } else if (word == "path4") {
        script.base = BaseKind::path4;
    } else {
        throw invalid_input_error("unknown base kind: " + word);
    }
    while (in >> word) {
        int a, b;
        if (!(in >> a >> b)) throw invalid_input_error("malformed step: " + word);
        if (word == "subdivide") script.steps.push_back(Step::subdivide(a, b));
        else if (word == "inflate") script.steps.push_back(Step::inflate(a, b));
        else if (word == "pendants") script.steps.push_back(Step::pendants(a, b));
        else throw invalid_input_error("unknown step kind: " + word);
    }
    script.replay();
    return script;
}

// ---- F1 ----------------------------------------------------------------------

void validate(const F1Params& p) {
    if (p.star_size < 1) throw precondition_error("F1: star size must be >= 1");
    if (p.subdivided < 1 || p.subdivided > p.star_size)
        throw precondition_error("F1: subdivided edge count must satisfy 1 <= a <= n");
    if (p.inflated < 0 || p.inflated > p.subdivided)
        throw precondition_error("F1: inflated path count must satisfy 0 <= b <= a");
    if (static_cast<int>(p.inflation_sizes.size()) != p.inflated ||
        static_cast<int>(p.inflated_pendants.size()) != p.inflated)
        throw precondition_error("F1: need one inflation size and pendant count per inflated path");
    if (static_cast<int>(p.outer_pendants.size()) != p.subdivided - p.inflated)
        throw precondition_error("F1: need one pendant count per non-inflated subdivided path");
    for (int k : p.inflation_sizes)
        if (k < 2) throw precondition_error("F1: inflation sizes must be >= 2");
    for (int q : p.inflated_pendants)
        if (q < 0) throw precondition_error("F1: pendant counts must be >= 0");
    for (int t : p.outer_pendants)
        if (t < 1)
            throw precondition_error("F1: non-inflated subdivided paths need at least one pendant");
    if (p.subdivided == p.star_size) {
        if (p.inflated == 0 && p.center_pendants < 1)
            throw precondition_error(
                "F1: with every edge subdivided and nothing inflated the center needs a pendant");
        if (p.center_pendants < 0) throw precondition_error("F1: center pendants must be >= 0");
    } else if (p.center_pendants != 0) {
        throw precondition_error(
            "F1: center pendants are only applied when every star edge was subdivided");
    }
}

int f1_order(const F1Params& p) {
    int order = 1 + p.star_size + p.subdivided + p.center_pendants;
    for (int k : p.inflation_sizes) order += k - 1;
    for (int q : p.inflated_pendants) order += q;
    for (int t : p.outer_pendants) order += t;
    return order;
}

BuildScript f1_script(const F1Params& p) {
    validate(p);
    int n = p.star_size, a = p.subdivided, b = p.inflated;
    Graph g = make_star(n);
    std::vector<Step> steps;
    auto run = [&](Step s) -> StepResult {
        steps.push_back(s);
        StepResult r = apply_step(g, s);
        g = r.graph;
        return r;
    };
    // Handles into the evolving graph: the center, the original star leaves,
    // and the subdivision vertex of each subdivided edge.
    int center = 0;
    std::vector<int> leaf(static_cast<size_t>(n + 1));
    for (int i = 1; i <= n; ++i) leaf[static_cast<size_t>(i)] = i;
    std::vector<int> mid(static_cast<size_t>(a + 1), -1);

    for (int i = 1; i <= a; ++i) {
        StepResult r = run(Step::subdivide(center, leaf[static_cast<size_t>(i)]));
        mid[static_cast<size_t>(i)] = r.new_vertices[0];
    }
    for (int i = 1; i <= b; ++i) {
        StepResult r = run(Step::inflate(mid[static_cast<size_t>(i)],
                                         p.inflation_sizes[static_cast<size_t>(i - 1)]));
        auto remap = [&](int& handle) { handle = r.old_to_new[static_cast<size_t>(handle)]; };
        remap(center);
        for (int j = 1; j <= n; ++j) remap(leaf[static_cast<size_t>(j)]);
        for (int j = 1; j <= a; ++j)
            if (j != i && mid[static_cast<size_t>(j)] >= 0) remap(mid[static_cast<size_t>(j)]);
        mid[static_cast<size_t>(i)] = -1;
    }
    for (int i = 1; i <= b; ++i) {
        int q = p.inflated_pendants[static_cast<size_t>(i - 1)];
        if (q > 0) run(Step::pendants(leaf[static_cast<size_t>(i)], q));
    }
    for (int i = b + 1; i <= a; ++i)
        run(Step::pendants(leaf[static_cast<size_t>(i)],
                           p.outer_pendants[static_cast<size_t>(i - b - 1)]));
    if (p.center_pendants > 0) run(Step::pendants(center, p.center_pendants));
    return BuildScript(BaseKind::star, n, std::move(steps));
}

Graph build_f1(const F1Params& p) {
    Graph g = f1_script(p).replay();
    if (g.order() != f1_order(p))
        throw std::logic_error("F1 construction produced an unexpected order");
    return g;
}

BoundsReport verify_f1(const F1Params& p) {
    Graph g = build_f1(p);
    BoundsReport r;
    r.n = g.order();
    r.m = g.size();
    r.min_degree = g.min_degree();
    r.max_degree = g.max_degree();
    r.connected = true;
    r.star = is_star(g);
    SolveResult a = alpha(g);
    SolveResult gc = gamma_tcoi(g);
    r.alpha_value = a.value;
    r.gamma_tcoi_value = gc.value;
    auto push = [&](BoundEntry e) {
        r.all_hold = r.all_hold && e.holds;
        r.entries.push_back(std::move(e));
    };
    push(make_entry("f1_alpha", Relation::eq, a.value, Rational::whole(p.subdivided + 1)));
    push(make_entry("f1_gamma_tcoi", Relation::eq, gc.value,
                    Rational::whole(2 * p.subdivided + 1)));
    push(make_entry("cover_upper_tight", Relation::eq, gc.value,
                    Rational::whole(2 * a.value - 1)));
    return r;
}

// ---- F2 ----------------------------------------------------------------------

namespace {

// Corner ids on the base C6 and the initial middle vertex of each corner path.
constexpr std::array<int, 3> kCorners{0, 2, 4};
constexpr std::array<int, 3> kMids{1, 3, 5};

int step_b_path(const F2StepB& b) {
    int idx = b.corner - 1;
    return b.toward_next ? idx : (idx + 2) % 3;
}

// Final multiplicity of parallel middle vertices on each corner path.
std::array<int, 3> final_multiplicities(const F2Params& p) {
    std::array<int, 3> m{};
    for (int j = 0; j < 3; ++j) m[static_cast<size_t>(j)] = p.inflation_sizes[static_cast<size_t>(j)];
    if (p.step_b) m[static_cast<size_t>(step_b_path(*p.step_b))] += p.step_b->size - 1;
    return m;
}

}  // namespace

void validate(const F2Params& p) {
    for (int t : p.pendant_counts)
        if (t < 0) throw precondition_error("F2: pendant counts must be >= 0");
    for (int k : p.inflation_sizes)
        if (k < 1) throw precondition_error("F2: inflation sizes must be >= 1");
    if (p.step_b) {
        if (p.step_b->corner < 1 || p.step_b->corner > 3)
            throw precondition_error("F2: step (b) corner index must be 1..3");
        if (p.step_b->size < 2) throw precondition_error("F2: step (b) inflation size must be >= 2");
        if (p.pendant_counts[static_cast<size_t>(p.step_b->corner - 1)] != 0)
            throw precondition_error(
                "F2: step (b) applies only to a corner that received no pendants");
    }
    // Every beta-set corner must end with degree >= 3: pendants or an adjacent
    // path of multiplicity >= 2.
    auto m = final_multiplicities(p);
    for (int i = 0; i < 3; ++i) {
        int next = i, prev = (i + 2) % 3;
        if (p.pendant_counts[static_cast<size_t>(i)] >= 1) continue;
        if (m[static_cast<size_t>(next)] >= 2 || m[static_cast<size_t>(prev)] >= 2) continue;
        throw precondition_error("F2: corner " + std::to_string(i + 1) +
                                 " would keep degree two; it needs a pendant or an adjacent "
                                 "inflation of size >= 2");
    }
}

int f2_order(const F2Params& p) {
    auto m = final_multiplicities(p);
    int order = 3;
    for (int i = 0; i < 3; ++i)
        order += p.pendant_counts[static_cast<size_t>(i)] + m[static_cast<size_t>(i)];
    return order;
}

BuildScript f2_script(const F2Params& p) {
    validate(p);
    Graph g = make_cycle(6);
    std::vector<Step> steps;
    auto run = [&](Step s) -> StepResult {
        steps.push_back(s);
        StepResult r = apply_step(g, s);
        g = r.graph;
        return r;
    };
    std::array<int, 3> corner = kCorners;
    std::array<int, 3> mid = kMids;  // one representative middle vertex per path
    for (int i = 0; i < 3; ++i) {
        int t = p.pendant_counts[static_cast<size_t>(i)];
        if (t > 0) run(Step::pendants(corner[static_cast<size_t>(i)], t));
    }
    auto inflate_path = [&](int path, int k) {
        StepResult r = run(Step::inflate(mid[static_cast<size_t>(path)], k));
        for (int& c : corner) c = r.old_to_new[static_cast<size_t>(c)];
        for (int j = 0; j < 3; ++j)
            if (j != path) mid[static_cast<size_t>(j)] = r.old_to_new[static_cast<size_t>(mid[static_cast<size_t>(j)])];
        mid[static_cast<size_t>(path)] = r.new_vertices[0];
    };
    if (p.step_b) inflate_path(step_b_path(*p.step_b), p.step_b->size);
    for (int j = 0; j < 3; ++j) {
        int k = p.inflation_sizes[static_cast<size_t>(j)];
        if (k >= 2) inflate_path(j, k);
        // identity inflations leave the graph unchanged up to relabeling and
        // are omitted from the script
    }
    return BuildScript(BaseKind::cycle6, 0, std::move(steps));
}

Graph build_f2(const F2Params& p) {
    Graph g = f2_script(p).replay();
    if (g.order() != f2_order(p))
        throw std::logic_error("F2 construction produced an unexpected order");
    return g;
}

BoundsReport verify_f2(const F2Params& p) {
    Graph g = build_f2(p);
    BoundsReport r;
    r.n = g.order();
    r.m = g.size();
    r.min_degree = g.min_degree();
    r.max_degree = g.max_degree();
    r.connected = true;
    r.star = false;
    SolveResult a = alpha(g);
    SolveResult gc = gamma_tcoi(g);
    r.alpha_value = a.value;
    r.gamma_tcoi_value = gc.value;
    auto push = [&](BoundEntry e) {
        r.all_hold = r.all_hold && e.holds;
        r.entries.push_back(std::move(e));
    };
    push(make_entry("f2_alpha", Relation::eq, a.value, Rational::whole(3)));
    push(make_entry("f2_gamma_tcoi", Relation::eq, gc.value, Rational::whole(5)));
    push(make_entry("cover_upper_tight", Relation::eq, gc.value,
                    Rational::whole(2 * a.value - 1)));
    return r;
}

// ---- Q_r ---------------------------------------------------------------------

Graph build_qr(int r) {
    if (r < 2) throw precondition_error("Q_r requires r >= 2");
    // spine: v=0, s=1, s_i = 1+i; pendants fill 2r+2 .. down from r+2
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i <= r; ++i) edges.emplace_back(i, i + 1);
    for (int i = 1; i <= r + 1; ++i) edges.emplace_back(i, r + 1 + i);
    return Graph(2 * r + 3, std::move(edges));
}

// ---- improvement lemmas --------------------------------------------------------

namespace {

// All vertex covers of minimum size, as masks. Instances are desk scale.
std::vector<std::uint64_t> minimum_covers(const Graph& g, int alpha_value) {
    int n = g.order();
    std::vector<std::uint64_t> covers;
    std::vector<int> idx(static_cast<size_t>(alpha_value));
    if (alpha_value == 0) return {0};
    for (int i = 0; i < alpha_value; ++i) idx[static_cast<size_t>(i)] = i;
    auto is_cover = [&](std::uint64_t mask) {
        for (auto [u, v] : g.edges())
            if (!(mask >> u & 1u) && !(mask >> v & 1u)) return false;
        return true;
    };
    for (;;) {
        std::uint64_t mask = 0;
        for (int i : idx) mask |= std::uint64_t{1} << i;
        if (is_cover(mask)) covers.push_back(mask);
        int i = alpha_value - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == n - alpha_value + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < alpha_value; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
    return covers;
}

}  // namespace

LemmaReport check_improvement_lemmas(const Graph& g) {
    if (g.order() > 24)
        throw precondition_error("improvement lemma audit enumerates covers; limited to n <= 24");
    LemmaReport rep;
    SolveResult a = alpha(g);
    SolveResult gc = gamma_tcoi(g);
    rep.alpha_value = a.value;
    rep.gamma_tcoi_value = gc.value;

    auto covers = minimum_covers(g, a.value);
    std::vector<std::vector<int>> dist;
    for (int v = 0; v < g.order(); ++v) dist.push_back(distances_from(g, v));

    for (std::uint64_t cover : covers) {
        std::vector<int> members;
        for (int v = 0; v < g.order(); ++v)
            if (cover >> v & 1u) members.push_back(v);
        // Lemma hypothesis: two adjacent cover vertices.
        bool independent = true;
        for (size_t i = 0; i < members.size() && independent; ++i)
            for (size_t j = i + 1; j < members.size() && independent; ++j)
                if (g.has_edge(members[i], members[j])) independent = false;
        if (!independent) rep.adjacent_cover_fires = true;

        // Lemma hypothesis: two vertex-disjoint distance-two pairs whose
        // connecting middles can be chosen distinct and outside the pairs.
        std::vector<std::pair<int, int>> distance2;
        for (size_t i = 0; i < members.size(); ++i)
            for (size_t j = i + 1; j < members.size(); ++j)
                if (dist[static_cast<size_t>(members[i])][static_cast<size_t>(members[j])] == 2)
                    distance2.emplace_back(members[i], members[j]);
        for (size_t i = 0; i < distance2.size() && !rep.disjoint_pairs_fires; ++i) {
            auto [u1, u2] = distance2[i];
            for (size_t j = i + 1; j < distance2.size() && !rep.disjoint_pairs_fires; ++j) {
                auto [v1, v2] = distance2[j];
                if (u1 == v1 || u1 == v2 || u2 == v1 || u2 == v2) continue;
                std::vector<int> w1, w2;
                for (int w = 0; w < g.order(); ++w) {
                    if (g.has_edge(u1, w) && g.has_edge(u2, w) && w != v1 && w != v2)
                        w1.push_back(w);
                    if (g.has_edge(v1, w) && g.has_edge(v2, w) && w != u1 && w != u2)
                        w2.push_back(w);
                }
                if (w1.empty() || w2.empty()) continue;
                if (w1.size() == 1 && w2.size() == 1 && w1[0] == w2[0]) continue;
                rep.disjoint_pairs_fires = true;
            }
        }
    }
    if (rep.adjacent_cover_fires) rep.adjacent_cover_holds = gc.value <= 2 * a.value - 2;
    if (rep.disjoint_pairs_fires) rep.disjoint_pairs_holds = gc.value <= 2 * a.value - 2;
    return rep;
}

// ---- parameter grids -----------------------------------------------------------

namespace {

// Distributes inflation sizes, pendant counts and the center allowance over
// the remaining order budget; every produced combination is valid and within
// budget by construction.
void fill_f1_grid(F1Params& p, int stage, int budget, std::vector<F1Params>& out) {
    int b = p.inflated;
    int a = p.subdivided;
    int plain = a - b;
    int center_min = (a == p.star_size && b == 0) ? 1 : 0;
    bool center_allowed = a == p.star_size;
    if (stage < b) {  // inflation sizes, cost k-1 each
        int reserve = (b - stage - 1) + plain + center_min;
        for (int k = 2; (k - 1) + reserve <= budget; ++k) {
            p.inflation_sizes.push_back(k);
            fill_f1_grid(p, stage + 1, budget - (k - 1), out);
            p.inflation_sizes.pop_back();
        }
        return;
    }
    if (stage < 2 * b) {  // pendants on inflated outer leaves, cost q each
        int reserve = plain + center_min;
        for (int q = 0; q + reserve <= budget; ++q) {
            p.inflated_pendants.push_back(q);
            fill_f1_grid(p, stage + 1, budget - q, out);
            p.inflated_pendants.pop_back();
        }
        return;
    }
    if (stage < 2 * b + plain) {  // pendants on plain outer leaves, cost t >= 1
        int remaining_plain = 2 * b + plain - stage - 1;
        int reserve = remaining_plain + center_min;
        for (int t = 1; t + reserve <= budget; ++t) {
            p.outer_pendants.push_back(t);
            fill_f1_grid(p, stage + 1, budget - t, out);
            p.outer_pendants.pop_back();
        }
        return;
    }
    for (int tc = center_min; tc <= budget; ++tc) {
        p.center_pendants = tc;
        out.push_back(p);
        if (!center_allowed) break;  // center pendants only when a == n
    }
    p.center_pendants = 0;
}

}  // namespace

std::vector<F1Params> enumerate_f1_params(int max_order) {
    std::vector<F1Params> out;
    for (int n = 1; n <= max_order; ++n) {
        for (int a = 1; a <= n; ++a) {
            for (int b = 0; b <= a; ++b) {
                int center_min = (a == n && b == 0) ? 1 : 0;
                int min_order = 1 + n + 2 * a + center_min;
                if (min_order > max_order) continue;
                F1Params p;
                p.star_size = n;
                p.subdivided = a;
                p.inflated = b;
                fill_f1_grid(p, 0, max_order - (1 + n + a), out);
            }
        }
    }
    for (const auto& p : out) validate(p);  // grid construction is total
    return out;
}

std::vector<F2Params> enumerate_f2_params(int max_order) {
    std::vector<F2Params> out;
    int budget = max_order - 3;  // corners are always present
    for (int m0 = 1; m0 <= budget; ++m0)
        for (int m1 = 1; m0 + m1 <= budget; ++m1)
            for (int m2 = 1; m0 + m1 + m2 <= budget; ++m2)
                for (int t0 = 0; m0 + m1 + m2 + t0 <= budget; ++t0)
                    for (int t1 = 0; m0 + m1 + m2 + t0 + t1 <= budget; ++t1)
                        for (int t2 = 0; m0 + m1 + m2 + t0 + t1 + t2 <= budget; ++t2) {
                            std::array<int, 3> m{m0, m1, m2};
                            std::array<int, 3> t{t0, t1, t2};
                            F2Params p;
                            p.pendant_counts = t;
                            p.inflation_sizes = m;
                            // route one adjacent multiplicity through step (b)
                            // for the first pendant-free corner, as the
                            // sequence prescribes
                            int deficient = -1;
                            for (int i = 0; i < 3 && deficient < 0; ++i)
                                if (t[static_cast<size_t>(i)] == 0) deficient = i;
                            if (deficient >= 0) {
                                int next = deficient, prev = (deficient + 2) % 3;
                                int path = -1;
                                bool toward_next = true;
                                if (m[static_cast<size_t>(next)] >= 2) {
                                    path = next;
                                } else if (m[static_cast<size_t>(prev)] >= 2) {
                                    path = prev;
                                    toward_next = false;
                                } else {
                                    continue;  // corner would keep degree two
                                }
                                F2StepB b;
                                b.corner = deficient + 1;
                                b.size = 2;
                                b.toward_next = toward_next;
                                p.step_b = b;
                                p.inflation_sizes[static_cast<size_t>(path)] -= 1;
                            }
                            try {
                                validate(p);
                            } catch (const precondition_error&) {
                                continue;
                            }
                            out.push_back(std::move(p));
                        }
    return out;
}

std::unordered_set<std::string> family_canonical_keys(int max_order) {
    if (max_order > 16)
        throw precondition_error("family_canonical_keys limited to max_order <= 16");
    std::unordered_set<std::string> keys;
    for (const auto& p : enumerate_f1_params(max_order)) keys.insert(canonical_form(build_f1(p)));
    for (const auto& p : enumerate_f2_params(max_order)) keys.insert(canonical_form(build_f2(p)));
    return keys;
}

// ---- figure instances -----------------------------------------------------------

F1Params f1_params_c4() {
    F1Params p;
    p.star_size = 1;
    p.subdivided = 1;
    p.inflated = 1;
    p.inflation_sizes = {2};
    p.inflated_pendants = {0};
    p.center_pendants = 0;
    return p;
}

F1Params f1_params_p5() {
    F1Params p;
    p.star_size = 1;
    p.subdivided = 1;
    p.inflated = 0;
    p.outer_pendants = {1};
    p.center_pendants = 1;
    return p;
}

F1Params f1_params_figure2() {
    // H_{5,5,3}: three inflated paths (sizes 3,2,2 with 2,3,0 extra pendants),
    // two plain subdivided paths (2 and 4 pendants), one center pendant.
    F1Params p;
    p.star_size = 5;
    p.subdivided = 5;
    p.inflated = 3;
    p.inflation_sizes = {3, 2, 2};
    p.inflated_pendants = {2, 3, 0};
    p.outer_pendants = {2, 4};
    p.center_pendants = 1;
    return p;
}

F2Params f2_params_figure3() {
    // Pendant counts (4,2,0); corner paths with multiplicities (2,3,1); the
    // pendant-free corner leans on the multiplicity-3 path via step (b).
    F2Params p;
    p.pendant_counts = {4, 2, 0};
    F2StepB b;
    b.corner = 3;
    b.size = 2;
    b.toward_next = false;  // path between v2 and v3
    p.step_b = b;
    p.inflation_sizes = {2, 2, 1};
    return p;
}

}  // namespace tcoi

#pragma once

#include <array>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "tcoi/bounds.hpp"
#include "tcoi/graph.hpp"

namespace tcoi {

// ---- primitive construction steps -------------------------------------------

enum class StepKind { subdivide, inflate, add_pendants };

struct Step {
    StepKind kind = StepKind::add_pendants;
    int u = -1;  // subdivide: first endpoint; inflate/pendants: target vertex
    int v = -1;  // subdivide: second endpoint; inflate: k; pendants: t

    static Step subdivide(int a, int b) { return {StepKind::subdivide, a, b}; }
    static Step inflate(int vertex, int k) { return {StepKind::inflate, vertex, k}; }
    static Step pendants(int vertex, int t) { return {StepKind::add_pendants, vertex, t}; }
};

struct StepResult {
    Graph graph;
    // old_to_new[v] = id of v afterwards, -1 if removed (inflation target).
    std::vector<int> old_to_new;
    std::vector<int> new_vertices;  // appended ids, in creation order
};

// Applies one step, checking its precondition (edge present; inflation target
// of degree two with non-adjacent neighbors; non-negative pendant count).
StepResult apply_step(const Graph& g, const Step& s);

// ---- replayable build scripts ------------------------------------------------

enum class BaseKind { star, cycle6, path4 };

struct BuildScript {
    BaseKind base = BaseKind::path4;
    int base_param = 0;  // star size for BaseKind::star
    std::vector<Step> steps;

    BuildScript() = default;
    BuildScript(BaseKind b, int param, std::vector<Step> s);  // validates by replay

    Graph base_graph() const;
    Graph replay() const;

    std::string to_text() const;
    static BuildScript from_text(const std::string& text);
};

// ---- family F1 (star-rooted extremal graphs) ---------------------------------

struct F1Params {
    int star_size = 1;                   // n: leaves of the base star
    int subdivided = 1;                  // a: 1 <= a <= n
    int inflated = 0;                    // b: 0 <= b <= a
    std::vector<int> inflation_sizes;    // k_i >= 2, one per inflated path
    std::vector<int> inflated_pendants;  // q_i >= 0, pendants on those outer leaves
    std::vector<int> outer_pendants;     // t_i >= 1, pendants on non-inflated outer leaves
    int center_pendants = 0;             // constrained by a,b (see validate)
};

void validate(const F1Params& p);  // throws precondition_error
int f1_order(const F1Params& p);
BuildScript f1_script(const F1Params& p);
Graph build_f1(const F1Params& p);
BoundsReport verify_f1(const F1Params& p);  // alpha = a+1, gamma_tcoi = 2a+1

// ---- family F2 (C6-rooted extremal graphs) -----------------------------------

struct F2StepB {
    int corner = 1;           // 1-based index into the beta-set corners
    int size = 2;             // k >= 2
    bool toward_next = true;  // which of the two adjacent paths is inflated
};

struct F2Params {
    std::array<int, 3> pendant_counts{0, 0, 0};  // t_i >= 0 on corners v1,v2,v3
    std::optional<F2StepB> step_b;
    std::array<int, 3> inflation_sizes{1, 1, 1};  // k_i >= 1 on the three corner paths
};

void validate(const F2Params& p);
int f2_order(const F2Params& p);
BuildScript f2_script(const F2Params& p);
Graph build_f2(const F2Params& p);
BoundsReport verify_f2(const F2Params& p);  // alpha = 3, gamma_tcoi = 5

// ---- Q_r caterpillar -----------------------------------------------------------

// Spine v s s_1 ... s_r with one pendant on s and on every s_i; r >= 2.
Graph build_qr(int r);

// ---- improvement lemmas --------------------------------------------------------

struct LemmaReport {
    int alpha_value = 0;
    int gamma_tcoi_value = 0;
    bool adjacent_cover_fires = false;  // some minimum cover is not independent
    bool adjacent_cover_holds = true;   // then gamma_tcoi <= 2 alpha - 2
    bool disjoint_pairs_fires = false;  // disjoint length-2 pairs inside a minimum cover
    bool disjoint_pairs_holds = true;
};

LemmaReport check_improvement_lemmas(const Graph& g);

// ---- bounded membership search -------------------------------------------------

// Every family member with at most max_order vertices, one per parameter
// choice (duplicates across choices are possible; callers dedup by key).
std::vector<F1Params> enumerate_f1_params(int max_order);
std::vector<F2Params> enumerate_f2_params(int max_order);

// Canonical keys of all F1/F2 members up to max_order (max_order <= 16).
std::unordered_set<std::string> family_canonical_keys(int max_order);

// Figure-referenced parameter choices used around the test suites.
F1Params f1_params_c4();
F1Params f1_params_p5();
F1Params f1_params_figure2();
F2Params f2_params_figure3();

}  // namespace tcoi

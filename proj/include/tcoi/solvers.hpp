#pragma once

#include <cstdint>
#include <optional>

#include "tcoi/graph.hpp"

namespace tcoi {

enum class Problem { gamma_t, gamma_tcoi, alpha, beta };
enum class Method { brute_force, branch_and_bound, tree_dp };

const char* problem_name(Problem p);
const char* method_name(Method m);

struct SolveResult {
    int value = 0;
    VertexSet witness;
    std::uint64_t nodes_explored = 0;
    Method method = Method::branch_and_bound;
};

struct ForcedAssignment {
    VertexSet forced_in;
    VertexSet forced_out;

    ForcedAssignment() = default;
    ForcedAssignment(VertexSet in, VertexSet out);  // validates disjointness
    static ForcedAssignment none(int universe) {
        return ForcedAssignment(VertexSet(universe), VertexSet(universe));
    }
};

// Exact optima via branch and bound. Solvers are pure and deterministic:
// branching always picks the lowest-indexed undecided vertex, inclusion
// explored first.
SolveResult gamma_t(const Graph& g);     // requires n >= 2, no isolated vertex
SolveResult gamma_tcoi(const Graph& g);  // infeasible on P2 / unions of P2s
SolveResult alpha(const Graph& g);
SolveResult beta(const Graph& g);        // also checks alpha + beta == n

// Optimum restricted to assignments extending `forced`; nullopt if none.
std::optional<SolveResult> solve_constrained(const Graph& g, Problem problem,
                                             const ForcedAssignment& forced);

// Subset-enumeration oracle: increasing cardinality, lexicographic within a
// cardinality, so the witness is the lexicographically smallest optimum set.
// Refuses n > 24 unless allow_large is set.
SolveResult solve_brute_force(const Graph& g, Problem problem, bool allow_large = false);
std::optional<SolveResult> solve_brute_force_constrained(const Graph& g, Problem problem,
                                                         const ForcedAssignment& forced,
                                                         bool allow_large = false);

// Linear-time rooted dynamic programs for trees.
SolveResult tree_gamma_t(const Graph& t);     // tree, n >= 2
SolveResult tree_gamma_tcoi(const Graph& t);  // tree, n >= 3

// True iff v lies in some minimum total co-independent dominating set.
bool in_some_min_tcid_set(const Graph& tree, int v);

// Lexicographically smallest minimum TC-ID set avoiding leaves when a
// leaf-free minimum set exists; otherwise the plain lexicographic minimum.
VertexSet canonical_leaf_free_tcid_set(const Graph& tree);

}  // namespace tcoi

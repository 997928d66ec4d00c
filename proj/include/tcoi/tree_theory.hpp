#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcoi/graph.hpp"

namespace tcoi {

// Derived vertex sets of a tree, all taken against the canonical leaf-free
// minimum TC-ID set.
struct TcidContext {
    Graph tree;
    VertexSet d_set;  // canonical leaf-free minimum TC-ID set
    VertexSet l3;     // leaves with another leaf at distance exactly three
    VertexSet v23;    // outside d_set, distance two or three to some leaf
    VertexSet v6;     // outside d_set, distance exactly three to some v23 vertex
};

// Requires a tree with at least two support vertices (stars, P2, P3 rejected).
TcidContext build_context(const Graph& t);

enum class TreeOp { F1, F2, F3, F4, F5 };

const char* tree_op_name(TreeOp op);

struct TreeOpStep {
    TreeOp op = TreeOp::F1;
    int anchor = -1;  // vertex of the tree the step extends
};

struct TreeOpSequence {
    std::vector<TreeOpStep> steps;

    std::string to_text() const;
    static TreeOpSequence from_text(const std::string& text);
};

// Applies one growth operation, validating the anchor's set membership:
// F1 needs a vertex lying in some minimum TC-ID set, F2/F3 a leaf of L3,
// F4 a V23 vertex, F5 a V6 vertex. New vertices are appended: the single
// vertex for F1/F2; (h1,h2) for F3 joined via anchor-h1; (h1,u1,h2) for
// F4/F5 joined via anchor-h1 with middle u1.
Graph apply_tree_op(const Graph& t, TreeOp op, int anchor);

// Replays a sequence starting from P4 (path 0-1-2-3).
Graph replay_sequence(const TreeOpSequence& seq);

// Trees with equal total domination and total co-independent domination
// numbers. Stars and paths shorter than P4 are rejected with an error since
// the tree theory assumes at least two supports.
bool is_in_t_gamma_t(const Graph& t);

struct FamilyMember {
    Graph tree;  // labeled as the recorded sequence replays it
    TreeOpSequence sequence;
};

// How much each operation adds to both domination numbers of a member.
int tree_op_value_delta(TreeOp op);

// Breadth-first closure of {P4} under the five operations, one member per
// isomorphism class, up to max_n vertices. Every growth step is validated to
// shift both domination numbers by the operation's exact delta.
std::vector<FamilyMember> generate_family_f(int max_n);

// Constructive recognizer reversing the characterization's peeling argument.
// Returns a replay-validated sequence, or nullopt for non-members.
std::optional<TreeOpSequence> recognize_family_f(const Graph& t);

// One representative per isomorphism class of free trees on n vertices
// (level-sequence generation of rooted trees, deduplicated by tree code).
std::vector<Graph> enumerate_free_trees(int n);

struct LeafDistanceReport {
    bool holds = true;
    std::vector<int> violations;  // non-leaf vertices outside D with no leaf within 3
};

// Requires t in T_gamma_t; checks every non-leaf vertex outside the canonical
// set has a leaf within distance three.
LeafDistanceReport check_leaf_distance_lemma(const Graph& t);

struct CharacterizationDisagreement {
    int n = 0;
    std::string code;
    bool in_family_by_value = false;  // gamma_tcoi == gamma_t
    bool recognized = false;
    bool generated = false;
};

struct CharacterizationReport {
    int max_n = 0;
    std::vector<int> trees_per_order;      // index i = order i, starting at 0
    std::vector<int> members_per_order;    // members of the family per order
    int stars_skipped = 0;
    std::vector<CharacterizationDisagreement> disagreements;
    std::vector<std::string> leaf_distance_violations;
    std::vector<std::string> private_neighbor_violations;
    std::vector<std::string> replay_failures;  // recognized scripts that failed validation

    bool ok() const {
        return disagreements.empty() && leaf_distance_violations.empty() &&
               private_neighbor_violations.empty() && replay_failures.empty();
    }
};

// Exhaustive agreement check of the three membership routes over all
// non-star trees with 4 <= n <= max_n (max_n <= 14).
CharacterizationReport verify_characterization(int max_n);

}  // namespace tcoi

#ifndef STRONGCLIQUE_EDGE_SIMPLICIAL_HPP
#define STRONGCLIQUE_EDGE_SIMPLICIAL_HPP

#include <vector>

#include "strongclique/graph.hpp"

namespace sc {

/// A degree-greedy maximal stable set: the greedy stable set along a
/// degree-nondecreasing vertex order (ties broken by vertex index).
struct GreedyStableSet {
    std::vector<int> members;       // ascending
    VertexOrder order_used;         // the degree order sigma
    std::vector<int> selection_trace;  // trace[v] == v if selected, else the
                                       // member that marked v first

    bool selected(int v) const { return selection_trace[v] == v; }
};

GreedyStableSet degree_greedy_stable_set(const Graph& g);

/// Companion multigraph G_S: one edge copy xy per stable-set member v and
/// unordered pair x != y in N(v). Vertices keep their indices in g; the
/// members of s are isolated in the result. Throws NotStableError.
Multigraph companion_multigraph(const Graph& g, const std::vector<int>& stable);

/// Linear-time edge-simplicial test for diamond-free graphs. The caller
/// guarantees diamond-freeness; the answer on other inputs is whatever the
/// same passes compute. A false verdict carries an EdgeWitness or the
/// guard's GuardCounts.
Verdict is_edge_simplicial_linear(const Graph& g);

/// Checked entry point: runs the diamond-free test first and throws
/// NotDiamondFreeError (with witness) before deciding.
Verdict is_edge_simplicial_checked(const Graph& g);

/// All vertices whose neighborhood induces a clique. Quadratic per vertex;
/// used by oracles and tests, never on the linear path.
std::vector<int> simplicial_vertices(const Graph& g);

}  // namespace sc

#endif

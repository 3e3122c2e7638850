#ifndef STRONGCLIQUE_GRAPH_HPP
#define STRONGCLIQUE_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace sc {

/// Simple undirected graph on vertices 0..n-1. Adjacency lists are kept
/// sorted ascending, loop-free and duplicate-free; construction enforces it.
struct Graph {
    int n = 0;
    std::int64_t m = 0;
    std::vector<std::vector<int>> adj;

    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj[v]; }

    // Edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph&) const = default;
};

/// Undirected multigraph: duplicate adjacency entries represent parallel
/// edges. m counts edges with multiplicity.
struct Multigraph {
    int n = 0;
    std::int64_t m = 0;
    std::vector<std::vector<int>> adj;
};

/// A permutation of 0..n-1 together with its inverse.
/// sequence[k] is the vertex at position k; rank[v] is the position of v.
struct VertexOrder {
    std::vector<int> sequence;
    std::vector<int> rank;

    static VertexOrder identity(int n);
    static VertexOrder from_sequence(std::vector<int> seq);
    int size() const { return static_cast<int>(sequence.size()); }
};

// ---------------------------------------------------------------------------
// Verdicts and certificates

/// A stable set claimed to relate to a named clique (dominating it, or
/// disjoint from it, depending on the emitting check).
struct CliqueStableSetWitness {
    std::vector<int> clique;
    std::vector<int> stable_set;
    bool operator==(const CliqueStableSetWitness&) const = default;
};

struct EdgeWitness {
    int u = -1, v = -1;
    bool operator==(const EdgeWitness&) const = default;
};

/// Vertices realizing a forbidden induced pattern (diamond, triangle,
/// unsettled P4, ...). Order is meaningful for path-shaped patterns.
struct InducedWitness {
    std::vector<int> vertices;
    bool operator==(const InducedWitness&) const = default;
};

struct VertexWitness {
    int v = -1;
    bool operator==(const VertexWitness&) const = default;
};

/// The counting certificate of the edge-simplicial guard: the simplicial
/// cliques implied by the greedy stable set would need more edges than the
/// graph has.
struct GuardCounts {
    std::int64_t clique_edge_sum = 0;
    std::int64_t edge_count = 0;
    bool operator==(const GuardCounts&) const = default;
};

using Certificate = std::variant<std::monostate, CliqueStableSetWitness,
                                 EdgeWitness, InducedWitness, VertexWitness,
                                 GuardCounts>;

/// Yes/no answer with a machine-checkable witness and a short human note.
struct Verdict {
    bool answer = false;
    Certificate certificate;
    std::string detail;

    static Verdict yes() { return Verdict{true, std::monostate{}, {}}; }
    static Verdict no(Certificate c, std::string why) {
        return Verdict{false, std::move(c), std::move(why)};
    }
};

// ---------------------------------------------------------------------------
// Construction and basic queries

/// Builds a simple graph; duplicate input edges collapse to one.
/// Throws IndexOutOfRangeError / SelfLoopError.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

/// Returns a copy whose neighbor lists are sorted increasingly by
/// order.rank, via a two-pass scatter in O(n+m).
Graph sort_adjacency(const Graph& g, const VertexOrder& order);
Multigraph sort_adjacency(const Multigraph& g, const VertexOrder& order);

/// Vertex sets of connected components, each sorted, ordered by smallest
/// member.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Part sizes (a,b) with a <= b iff the connected graph g is a complete
/// bipartite graph K_{a,b} (a,b >= 1). Throws NotConnectedError.
std::optional<std::pair<int, int>> complete_bipartite_signature(const Graph& g);

Graph complement(const Graph& g);

/// Subgraph induced by verts; vertex verts[i] becomes i.
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts);

bool is_clique(const Graph& g, const std::vector<int>& vs);
bool is_stable_set(const Graph& g, const std::vector<int>& vs);

}  // namespace sc

#endif

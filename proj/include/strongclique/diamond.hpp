#ifndef STRONGCLIQUE_DIAMOND_HPP
#define STRONGCLIQUE_DIAMOND_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "strongclique/graph.hpp"

namespace sc {

/// Maximal cliques of a diamond-free graph, indexed by any edge they
/// contain. Isolated vertices are kept apart as their own size-1 cliques.
struct CliqueSet {
    std::vector<std::vector<int>> cliques;
    std::unordered_map<std::uint64_t, int> edge_index;
    std::vector<int> isolated;

    static std::uint64_t edge_key(int u, int v) {
        if (u > v) std::swap(u, v);
        return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
    }
    int clique_of_edge(int u, int v) const { return edge_index.at(edge_key(u, v)); }

    /// Clique indices containing v; size-1 cliques of isolated vertices are
    /// not included.
    std::vector<std::vector<int>> membership(int n) const;
};

/// True iff g has no induced diamond (K4 minus an edge). A false verdict
/// carries an InducedWitness of 4 vertices spanning exactly 5 edges.
Verdict is_diamond_free(const Graph& g);

/// The unique-maximal-clique-per-edge family of a diamond-free graph.
/// Throws NotDiamondFreeError if a candidate fails the clique re-check.
CliqueSet maximal_cliques_diamond_free(const Graph& g);

}  // namespace sc

#endif

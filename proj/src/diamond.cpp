#include "strongclique/diamond.hpp"

#include <algorithm>

#include "strongclique/errors.hpp"

namespace sc {

namespace {

// Common neighborhood of an edge, by linear merge of the sorted lists.
std::vector<int> common_neighbors(const Graph& g, int u, int v) {
    std::vector<int> out;
    const auto& a = g.adj[u];
    const auto& b = g.adj[v];
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else {
            out.push_back(a[i]);
            ++i, ++j;
        }
    }
    return out;
}

}  // namespace

std::vector<std::vector<int>> CliqueSet::membership(int n) const {
    std::vector<std::vector<int>> member(n);
    for (int c = 0; c < static_cast<int>(cliques.size()); ++c)
        for (int v : cliques[c]) member[v].push_back(c);
    return member;
}

Verdict is_diamond_free(const Graph& g) {
    for (int u = 0; u < g.n; ++u) {
        for (int v : g.adj[u]) {
            if (v < u) continue;
            const auto common = common_neighbors(g, u, v);
            // The common neighborhood of an edge must be a clique; a
            // non-adjacent pair in it closes a diamond with u,v.
            for (std::size_t i = 0; i < common.size(); ++i)
                for (std::size_t j = i + 1; j < common.size(); ++j)
                    if (!g.has_edge(common[i], common[j]))
                        return Verdict::no(
                            InducedWitness{{u, v, common[i], common[j]}},
                            "vertices induce a diamond");
        }
    }
    return Verdict::yes();
}

CliqueSet maximal_cliques_diamond_free(const Graph& g) {
    CliqueSet out;
    for (int v = 0; v < g.n; ++v)
        if (g.adj[v].empty()) out.isolated.push_back(v);

    for (int u = 0; u < g.n; ++u) {
        for (int v : g.adj[u]) {
            if (v < u || out.edge_index.count(CliqueSet::edge_key(u, v))) continue;
            std::vector<int> clique = common_neighbors(g, u, v);
            clique.push_back(u);
            clique.push_back(v);
            std::sort(clique.begin(), clique.end());
            if (!is_clique(g, clique))
                throw NotDiamondFreeError(
                    "edge " + std::to_string(u) + "-" + std::to_string(v) +
                    " has a non-clique common neighborhood; graph is not diamond-free");
            const int idx = static_cast<int>(out.cliques.size());
            for (std::size_t i = 0; i < clique.size(); ++i)
                for (std::size_t j = i + 1; j < clique.size(); ++j) {
                    auto [it, inserted] = out.edge_index.emplace(
                        CliqueSet::edge_key(clique[i], clique[j]), idx);
                    if (!inserted && it->second != idx)
                        throw NotDiamondFreeError(
                            "edge " + std::to_string(clique[i]) + "-" +
                            std::to_string(clique[j]) +
                            " lies in two maximal cliques; graph is not diamond-free");
                }
            out.cliques.push_back(std::move(clique));
        }
    }
    return out;
}

}  // namespace sc

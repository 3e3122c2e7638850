#include "strongclique/edge_simplicial.hpp"

#include <algorithm>

#include "strongclique/diamond.hpp"
#include "strongclique/errors.hpp"

namespace sc {

namespace {

// Degree-nondecreasing order via counting sort; equal degrees keep index
// order because vertices are scanned ascending.
VertexOrder degree_order(const Graph& g) {
    std::vector<int> count(g.n + 1, 0);
    for (int v = 0; v < g.n; ++v) ++count[g.degree(v)];
    std::vector<int> start(g.n + 2, 0);
    for (int d = 0; d <= g.n; ++d) start[d + 1] = start[d] + count[d];
    std::vector<int> seq(g.n);
    for (int v = 0; v < g.n; ++v) seq[start[g.degree(v)]++] = v;
    return VertexOrder::from_sequence(std::move(seq));
}

// Multiset diff of the two lists for vertex w, in sigma order. Lists are
// only inspected on the failure path, so sorting here is fine.
Verdict mismatch_certificate(int w, std::vector<int> g_minus_s_list,
                             std::vector<int> g_s_list,
                             const std::vector<int>& rank) {
    auto by_rank = [&rank](int a, int b) { return rank[a] < rank[b]; };
    std::sort(g_minus_s_list.begin(), g_minus_s_list.end(), by_rank);
    std::sort(g_s_list.begin(), g_s_list.end(), by_rank);
    std::size_t i = 0, j = 0;
    while (i < g_minus_s_list.size() && j < g_s_list.size()) {
        const int a = g_minus_s_list[i];
        const int b = g_s_list[j];
        if (a == b) {
            ++i, ++j;
            continue;
        }
        if (rank[a] < rank[b])
            return Verdict::no(EdgeWitness{w, a},
                               "edge of G-S is in no simplicial clique");
        return Verdict::no(EdgeWitness{w, b},
                           "G_S has a duplicate or spurious edge");
    }
    if (i < g_minus_s_list.size())
        return Verdict::no(EdgeWitness{w, g_minus_s_list[i]},
                           "edge of G-S is in no simplicial clique");
    if (j < g_s_list.size())
        return Verdict::no(EdgeWitness{w, g_s_list[j]},
                           "G_S has a duplicate or spurious edge");
    return Verdict::yes();  // unreachable for a genuine mismatch
}

}  // namespace

GreedyStableSet degree_greedy_stable_set(const Graph& g) {
    GreedyStableSet out;
    out.order_used = degree_order(g);
    out.selection_trace.assign(g.n, -1);
    for (int pos = 0; pos < g.n; ++pos) {
        const int v = out.order_used.sequence[pos];
        if (out.selection_trace[v] != -1) continue;
        out.selection_trace[v] = v;
        out.members.push_back(v);
        for (int w : g.adj[v])
            if (out.selection_trace[w] == -1) out.selection_trace[w] = v;
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

Multigraph companion_multigraph(const Graph& g, const std::vector<int>& stable) {
    std::vector<char> in_s(g.n, 0);
    for (int v : stable) in_s[v] = 1;
    for (int v : stable)
        for (int w : g.adj[v])
            if (in_s[w])
                throw NotStableError("vertices " + std::to_string(v) + " and " +
                                     std::to_string(w) + " are adjacent");
    Multigraph gs;
    gs.n = g.n;
    gs.adj.assign(g.n, {});
    for (int v : stable) {
        const auto& nv = g.adj[v];
        for (int w : nv)
            for (int x : nv)
                if (x != w) gs.adj[w].push_back(x);
        const std::int64_t d = static_cast<std::int64_t>(nv.size());
        gs.m += d * (d - 1) / 2;
    }
    return gs;
}

Verdict is_edge_simplicial_linear(const Graph& g) {
    // Lines 1-2: degree order, then every adjacency list sorted by it.
    const VertexOrder sigma = degree_order(g);
    const Graph sorted = sort_adjacency(g, sigma);

    // Lines 3-6: sigma-greedy stable set.
    std::vector<char> in_s(g.n, 0);
    std::vector<char> marked(g.n, 0);
    std::vector<int> members;
    for (int pos = 0; pos < g.n; ++pos) {
        const int v = sigma.sequence[pos];
        if (marked[v]) continue;
        marked[v] = 1;
        in_s[v] = 1;
        members.push_back(v);
        for (int w : sorted.adj[v]) marked[w] = 1;
    }

    // Line 7: adjacency of G-S, still in sigma order after filtering.
    std::vector<std::vector<int>> g_minus_s(g.n);
    for (int w = 0; w < g.n; ++w) {
        if (in_s[w]) continue;
        for (int x : sorted.adj[w])
            if (!in_s[x]) g_minus_s[w].push_back(x);
    }

    // Lines 8-9: the counting guard. The simplicial cliques N[v], v in S,
    // would be pairwise edge-disjoint, so their edges cannot outnumber E(G).
    std::int64_t clique_edge_sum = 0;
    for (int v : members) {
        const std::int64_t k = sorted.degree(v) + 1;
        clique_edge_sum += k * (k - 1) / 2;
    }
    if (clique_edge_sum > g.m)
        return Verdict::no(GuardCounts{clique_edge_sum, g.m},
                           "greedy stable set implies more simplicial-clique "
                           "edges than the graph has");

    // Lines 10-14: adjacency lists of the multigraph G_S.
    std::vector<std::vector<int>> g_s(g.n);
    for (int v : members) {
        const auto& nv = sorted.adj[v];
        for (int w : nv)
            for (int x : nv)
                if (x != w) g_s[w].push_back(x);
    }

    // Lines 15-17: length comparison before any sorting.
    for (int w = 0; w < g.n; ++w)
        if (!in_s[w] && g_s[w].size() != g_minus_s[w].size())
            return mismatch_certificate(w, g_minus_s[w], g_s[w], sigma.rank);

    // Line 18: sigma-sort the G_S lists with the same scatter pass.
    {
        std::vector<std::vector<int>> sorted_gs(g.n);
        for (int w = 0; w < g.n; ++w) sorted_gs[w].reserve(g_s[w].size());
        for (int pos = 0; pos < g.n; ++pos) {
            const int u = sigma.sequence[pos];
            for (int w : g_s[u]) sorted_gs[w].push_back(u);
        }
        g_s = std::move(sorted_gs);
    }

    // Lines 19-21: element-wise equality of the sigma-sorted lists.
    for (int w = 0; w < g.n; ++w) {
        if (in_s[w]) continue;
        for (std::size_t k = 0; k < g_s[w].size(); ++k)
            if (g_s[w][k] != g_minus_s[w][k])
                return mismatch_certificate(w, g_minus_s[w], g_s[w], sigma.rank);
    }
    return Verdict::yes();
}

Verdict is_edge_simplicial_checked(const Graph& g) {
    const Verdict df = is_diamond_free(g);
    if (!df.answer)
        throw NotDiamondFreeError("input graph is not diamond-free",
                                  std::get<InducedWitness>(df.certificate).vertices);
    return is_edge_simplicial_linear(g);
}

std::vector<int> simplicial_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v) {
        const auto& nv = g.adj[v];
        bool simplicial = true;
        for (std::size_t i = 0; i < nv.size() && simplicial; ++i)
            for (std::size_t j = i + 1; j < nv.size(); ++j)
                if (!g.has_edge(nv[i], nv[j])) {
                    simplicial = false;
                    break;
                }
        if (simplicial) out.push_back(v);
    }
    return out;
}

}  // namespace sc

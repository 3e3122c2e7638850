#include "strongclique/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "strongclique/errors.hpp"

namespace sc {

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexOrder VertexOrder::identity(int n) {
    VertexOrder o;
    o.sequence.resize(n);
    std::iota(o.sequence.begin(), o.sequence.end(), 0);
    o.rank = o.sequence;
    return o;
}

VertexOrder VertexOrder::from_sequence(std::vector<int> seq) {
    const int n = static_cast<int>(seq.size());
    VertexOrder o;
    o.rank.assign(n, -1);
    for (int pos = 0; pos < n; ++pos) {
        const int v = seq[pos];
        if (v < 0 || v >= n || o.rank[v] != -1)
            throw IndexOutOfRangeError("order is not a permutation of 0..n-1");
        o.rank[v] = pos;
    }
    o.sequence = std::move(seq);
    return o;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw IndexOutOfRangeError("negative vertex count");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw IndexOutOfRangeError("edge endpoint " +
                                       std::to_string(u < 0 || u >= n ? u : v) +
                                       " out of range for n=" + std::to_string(n));
        if (u == v)
            throw SelfLoopError("self-loop at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        g.m += static_cast<std::int64_t>(a.size());
    }
    g.m /= 2;
    return g;
}

namespace {

// Scatter pass shared by both adjacency sorts: scanning sources in sigma
// order appends each occurrence to the target list, so every rebuilt list
// ends up sorted by rank without any comparison sort.
std::vector<std::vector<int>> scatter_sort(const std::vector<std::vector<int>>& adj,
                                           const VertexOrder& order) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> out(n);
    for (int v = 0; v < n; ++v) out[v].reserve(adj[v].size());
    for (int pos = 0; pos < n; ++pos) {
        const int u = order.sequence[pos];
        for (int w : adj[u]) out[w].push_back(u);
    }
    return out;
}

void check_order(int n, const VertexOrder& order) {
    if (order.size() != n)
        throw IndexOutOfRangeError("order size does not match vertex count");
}

}  // namespace

Graph sort_adjacency(const Graph& g, const VertexOrder& order) {
    check_order(g.n, order);
    Graph out = g;
    out.adj = scatter_sort(g.adj, order);
    return out;
}

Multigraph sort_adjacency(const Multigraph& g, const VertexOrder& order) {
    check_order(g.n, order);
    Multigraph out = g;
    out.adj = scatter_sort(g.adj, order);
    return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::optional<std::pair<int, int>> complete_bipartite_signature(const Graph& g) {
    if (g.n == 0) throw NotConnectedError("empty graph has no components");
    // BFS 2-coloring from vertex 0; doubles as the connectivity check.
    std::vector<int> color(g.n, -1);
    std::queue<int> q;
    color[0] = 0;
    q.push(0);
    int visited = 1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int w : g.adj[v]) {
            if (color[w] == -1) {
                color[w] = 1 - color[v];
                ++visited;
                q.push(w);
            } else if (color[w] == color[v]) {
                return std::nullopt;  // odd cycle
            }
        }
    }
    if (visited != g.n) throw NotConnectedError("graph is not connected");
    if (g.n == 1) return std::nullopt;  // one part would be empty

    int a = 0;
    for (int v = 0; v < g.n; ++v) a += (color[v] == 0);
    const int b = g.n - a;
    // Degree check from the bipartition: complete iff every vertex sees the
    // whole opposite side.
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) != (color[v] == 0 ? b : a)) return std::nullopt;
    return std::make_pair(std::min(a, b), std::max(a, b));
}

Graph complement(const Graph& g) {
    Graph out;
    out.n = g.n;
    out.adj.assign(g.n, {});
    for (int u = 0; u < g.n; ++u) {
        auto it = g.adj[u].begin();
        for (int v = 0; v < g.n; ++v) {
            while (it != g.adj[u].end() && *it < v) ++it;
            if (v == u || (it != g.adj[u].end() && *it == v)) continue;
            out.adj[u].push_back(v);
        }
        out.m += static_cast<std::int64_t>(out.adj[u].size());
    }
    out.m /= 2;
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> local(g.n, -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
        const int v = verts[i];
        if (v < 0 || v >= g.n) throw IndexOutOfRangeError("induced vertex out of range");
        if (local[v] != -1) throw IndexOutOfRangeError("duplicate vertex in induced set");
        local[v] = i;
    }
    Graph out;
    out.n = static_cast<int>(verts.size());
    out.adj.assign(out.n, {});
    for (int i = 0; i < out.n; ++i) {
        for (int w : g.adj[verts[i]])
            if (local[w] != -1) out.adj[i].push_back(local[w]);
        std::sort(out.adj[i].begin(), out.adj[i].end());
        out.m += static_cast<std::int64_t>(out.adj[i].size());
    }
    out.m /= 2;
    return out;
}

bool is_clique(const Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.has_edge(vs[i], vs[j])) return false;
    return true;
}

bool is_stable_set(const Graph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.has_edge(vs[i], vs[j])) return false;
    return true;
}

}  // namespace sc

#include "rhomin/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace rhomin {

int Graph::check(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
    return v;
}

bool Graph::has_edge(int u, int v) const {
    check(u);
    check(v);
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::uint64_t Graph::neighbor_mask(int v) const {
    if (n_ > 64) throw std::invalid_argument("neighbor_mask needs n <= 64");
    std::uint64_t m = 0;
    for (int w : adj_[check(v)]) m |= (std::uint64_t{1} << w);
    return m;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop edge rejected");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.m_ = 0;
    for (auto& a : g.adj_) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        g.m_ += static_cast<int>(a.size());
    }
    g.m_ /= 2;
    return g;
}

namespace {

std::vector<int> bfs_levels(const Graph& g, int src) {
    std::vector<int> dist(g.num_vertices(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
    int n = g.num_vertices();
    if (n == 0) return false;
    auto dist = bfs_levels(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

bool is_tree(const Graph& g) {
    return g.num_vertices() >= 1 && g.num_edges() == g.num_vertices() - 1 &&
           is_connected(g);
}

std::optional<int> distance(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.num_vertices() || v < 0 || v >= g.num_vertices())
        throw std::invalid_argument("vertex id out of range");
    auto dist = bfs_levels(g, u);
    if (dist[v] < 0) return std::nullopt;
    return dist[v];
}

std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> d(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

Graph remove_vertex(const Graph& g, int v) { return remove_vertices(g, {v}); }

Graph remove_vertices(const Graph& g, const std::vector<int>& vs) {
    int n = g.num_vertices();
    std::vector<char> gone(n, 0);
    for (int v : vs) {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
        gone[v] = 1;
    }
    std::vector<int> newid(n, -1);
    int k = 0;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) newid[v] = k++;
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges())
        if (!gone[u] && !gone[v]) es.emplace_back(newid[u], newid[v]);
    return build_graph(k, es);
}

Graph with_edge(const Graph& g, int u, int v) {
    auto es = g.edges();
    es.emplace_back(u, v);
    return build_graph(g.num_vertices(), es);
}

Graph without_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("edge not present");
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : g.edges())
        if (!((a == u && b == v) || (a == v && b == u))) es.emplace_back(a, b);
    return build_graph(g.num_vertices(), es);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    int off = g.num_vertices();
    auto es = g.edges();
    for (auto [u, v] : h.edges()) es.emplace_back(u + off, v + off);
    return build_graph(off + h.num_vertices(), es);
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.num_vertices();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    std::vector<int> newid(g.num_vertices(), -1);
    for (size_t i = 0; i < vs.size(); ++i) {
        int v = vs[i];
        if (v < 0 || v >= g.num_vertices())
            throw std::invalid_argument("vertex id out of range");
        if (newid[v] != -1) throw std::invalid_argument("duplicate vertex in selection");
        newid[v] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges())
        if (newid[u] >= 0 && newid[v] >= 0) es.emplace_back(newid[u], newid[v]);
    return build_graph(static_cast<int>(vs.size()), es);
}

}  // namespace rhomin

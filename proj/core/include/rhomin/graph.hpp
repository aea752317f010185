#ifndef RHOMIN_GRAPH_HPP
#define RHOMIN_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rhomin {

// Simple undirected graph, loop-free, immutable after construction.
// Vertices are 0..n-1; neighbor lists are kept sorted.
class Graph {
public:
    Graph() = default;

    int num_vertices() const { return n_; }
    int num_edges() const { return m_; }
    int degree(int v) const { return static_cast<int>(adj_[check(v)].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[check(v)]; }
    bool has_edge(int u, int v) const;

    // Edges as (u,v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    // Neighbor bitmask; only valid for n <= 64.
    std::uint64_t neighbor_mask(int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

    friend Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

private:
    int check(int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Throws std::invalid_argument on loops, out-of-range endpoints or n < 0.
// Duplicate edges collapse to one.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

// BFS distance; nullopt when u and v are in different components.
std::optional<int> distance(const Graph& g, int u, int v);

std::vector<int> degree_sequence(const Graph& g);  // ascending

// Vertex deletion (keeps ids of the remaining vertices compacted in order).
Graph remove_vertex(const Graph& g, int v);
Graph remove_vertices(const Graph& g, const std::vector<int>& vs);

// Edge add/remove convenience; both validate their inputs.
Graph with_edge(const Graph& g, int u, int v);
Graph without_edge(const Graph& g, int u, int v);

// Disjoint union: h's vertices are shifted by g.num_vertices().
Graph disjoint_union(const Graph& g, const Graph& h);

std::vector<std::vector<int>> connected_components(const Graph& g);

// Induced subgraph on vs (ids compacted in the order given; vs must be distinct).
Graph induced_subgraph(const Graph& g, const std::vector<int>& vs);

}  // namespace rhomin

#endif

#include "rhomin/transforms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rhomin/canonical.hpp"
#include "rhomin/domination.hpp"

namespace rhomin {

namespace {

bool is_branching(const Graph& g, int v) { return g.degree(v) >= 3; }

std::vector<int> normalize_sequence(std::vector<int> seq) {
    std::vector<int> rev(seq.rbegin(), seq.rend());
    return std::min(seq, rev);
}

void require_vertex(const Graph& g, int v, const char* who) {
    if (v < 0 || v >= g.num_vertices())
        throw std::invalid_argument(std::string(who) + ": vertex out of range");
}

// Check that `path` is a pendant path hanging at v: path[0] adjacent to v,
// consecutive vertices adjacent, interior degrees 2, final degree 1.
void require_pendant_path(const Graph& g, int v, const std::vector<int>& path, const char* who) {
    if (path.empty()) throw std::invalid_argument(std::string(who) + ": empty path");
    if (!g.has_edge(v, path[0]))
        throw std::invalid_argument(std::string(who) + ": path not rooted at v");
    for (size_t i = 0; i < path.size(); ++i) {
        require_vertex(g, path[i], who);
        if (path[i] == v) throw std::invalid_argument(std::string(who) + ": path revisits root");
        if (i + 1 < path.size()) {
            if (!g.has_edge(path[i], path[i + 1]))
                throw std::invalid_argument(std::string(who) + ": path not connected");
            if (g.degree(path[i]) != 2)
                throw std::invalid_argument(std::string(who) + ": interior degree != 2");
        } else if (g.degree(path[i]) != 1) {
            throw std::invalid_argument(std::string(who) + ": path does not end at a leaf");
        }
    }
}

}  // namespace

std::vector<InternalPath> internal_paths(const Graph& g) {
    std::set<std::vector<int>> seen;
    std::vector<InternalPath> out;
    for (int b = 0; b < g.num_vertices(); ++b) {
        if (!is_branching(g, b)) continue;
        for (int w0 : g.neighbors(b)) {
            std::vector<int> walk{b, w0};
            int prev = b, cur = w0;
            while (g.degree(cur) == 2) {
                int nxt = (g.neighbors(cur)[0] == prev) ? g.neighbors(cur)[1]
                                                        : g.neighbors(cur)[0];
                walk.push_back(nxt);
                prev = cur;
                cur = nxt;
            }
            if (!is_branching(g, cur)) continue;  // ended at a leaf: pendant path
            std::vector<int> key = normalize_sequence(walk);
            if (seen.insert(key).second) out.push_back({std::move(walk)});
        }
    }
    std::sort(out.begin(), out.end(), [](const InternalPath& a, const InternalPath& b) {
        return a.vertices < b.vertices;
    });
    return out;
}

std::vector<PendantPath> pendant_paths_at(const Graph& g, int u) {
    require_vertex(g, u, "pendant_paths_at");
    std::vector<PendantPath> out;
    for (int w0 : g.neighbors(u)) {
        std::vector<int> walk{w0};
        int prev = u, cur = w0;
        while (g.degree(cur) == 2) {
            int nxt = (g.neighbors(cur)[0] == prev) ? g.neighbors(cur)[1] : g.neighbors(cur)[0];
            walk.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        if (g.degree(cur) == 1) out.push_back({std::move(walk)});
    }
    std::sort(out.begin(), out.end(), [](const PendantPath& a, const PendantPath& b) {
        return a.vertices < b.vertices;
    });
    return out;
}

Graph subdivide(const Graph& g, std::pair<int, int> edge, int k) {
    auto [u, v] = edge;
    require_vertex(g, u, "subdivide");
    require_vertex(g, v, "subdivide");
    if (!g.has_edge(u, v)) throw std::invalid_argument("subdivide: edge absent");
    if (k != 1 && k != 2) throw std::invalid_argument("subdivide: k must be 1 or 2");
    int n = g.num_vertices();
    std::vector<std::pair<int, int>> edges;
    for (auto e : g.edges()) {
        if ((e.first == std::min(u, v)) && (e.second == std::max(u, v))) continue;
        edges.push_back(e);
    }
    // Chain u - n - (n+1) - v.
    int prev = u;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(prev, n + i);
        prev = n + i;
    }
    edges.emplace_back(prev, v);
    return build_graph(n + k, edges);
}

Graph slide_path(const Graph& g, int v, const std::vector<int>& s_path,
                 const std::vector<int>& t_path) {
    require_vertex(g, v, "slide_path");
    require_pendant_path(g, v, s_path, "slide_path");
    require_pendant_path(g, v, t_path, "slide_path");
    if (s_path.size() > t_path.size())
        throw std::invalid_argument("slide_path: need |s_path| <= |t_path|");
    for (int x : s_path) {
        for (int y : t_path) {
            if (x == y) throw std::invalid_argument("slide_path: paths share a vertex");
        }
    }
    int moved = s_path.back();
    int detach_from = (s_path.size() == 1) ? v : s_path[s_path.size() - 2];
    Graph cut = without_edge(g, detach_from, moved);
    return with_edge(cut, t_path.back(), moved);
}

Graph shift_edges(const Graph& g, int u, int v, const std::vector<int>& ws) {
    require_vertex(g, u, "shift_edges");
    require_vertex(g, v, "shift_edges");
    if (u == v) throw std::invalid_argument("shift_edges: u == v");
    Graph out = g;
    for (int w : ws) {
        require_vertex(g, w, "shift_edges");
        if (w == u) throw std::invalid_argument("shift_edges: u in w-set");
        if (!g.has_edge(v, w)) throw std::invalid_argument("shift_edges: w not a neighbor of v");
        if (g.has_edge(u, w)) throw std::invalid_argument("shift_edges: w already adjacent to u");
        out = with_edge(without_edge(out, v, w), u, w);
    }
    return out;
}

namespace {

// Longest pendant path at u; ties by lexicographically least vertex
// sequence.  Returns index into `paths`.
size_t longest_path_index(const std::vector<PendantPath>& paths) {
    size_t best = 0;
    for (size_t i = 1; i < paths.size(); ++i) {
        const auto& a = paths[i].vertices;
        const auto& b = paths[best].vertices;
        if (a.size() > b.size() || (a.size() == b.size() && a < b)) best = i;
    }
    return best;
}

Graph consolidate(const Graph& t, const std::vector<int>& d, int u, bool u_in_d,
                  const char* who) {
    if (!is_tree(t)) throw std::invalid_argument(std::string(who) + ": input is not a tree");
    require_vertex(t, u, who);
    bool in_d = std::find(d.begin(), d.end(), u) != d.end();
    if (in_d != u_in_d)
        throw std::invalid_argument(std::string(who) + ": dominating-set membership mismatch");
    if (!is_branching(t, u))
        throw std::invalid_argument(std::string(who) + ": u is not a branching vertex");
    std::vector<PendantPath> paths = pendant_paths_at(t, u);
    if (paths.size() < 2)
        throw std::invalid_argument(std::string(who) + ": u has fewer than two pendant paths");
    size_t keep = longest_path_index(paths);
    int anchor = paths[keep].vertices.back();
    Graph out = t;
    for (size_t i = 0; i < paths.size(); ++i) {
        if (i == keep) continue;
        const auto& p = paths[i].vertices;
        if (u_in_d) {
            if (p.size() < 2) continue;  // no second vertex: formula degenerates
            out = with_edge(without_edge(out, p[0], p[1]), anchor, p[1]);
        } else {
            out = with_edge(without_edge(out, u, p[0]), anchor, p[0]);
        }
    }
    return out;
}

}  // namespace

Graph tr1(const Graph& t, const std::vector<int>& d, int u) {
    return consolidate(t, d, u, true, "tr1");
}

Graph tr2(const Graph& t, const std::vector<int>& d, int u) {
    return consolidate(t, d, u, false, "tr2");
}

Graph diamond_reduce(const Graph& t, const std::vector<int>& d) {
    if (!is_tree(t)) throw std::invalid_argument("diamond_reduce: input is not a tree");
    if (!is_dominating_set(t, d))
        throw std::invalid_argument("diamond_reduce: d is not a dominating set");
    std::vector<char> in_d(t.num_vertices(), 0);
    for (int v : d) in_d[v] = 1;
    Graph cur = t;
    long cap = static_cast<long>(t.num_vertices()) * t.num_vertices() + 2;
    for (long round = 0; round < cap; ++round) {
        bool changed = false;
        for (int pass = 0; pass < 2; ++pass) {
            bool want_in_d = (pass == 1);  // tr2 phase first, then tr1
            for (int u = 0; u < cur.num_vertices(); ++u) {
                if (static_cast<bool>(in_d[u]) != want_in_d) continue;
                if (!is_branching(cur, u)) continue;
                if (pendant_paths_at(cur, u).size() < 2) continue;
                Graph next = consolidate(cur, d, u, want_in_d, want_in_d ? "tr1" : "tr2");
                if (!(next == cur)) {
                    cur = std::move(next);
                    changed = true;
                }
            }
        }
        if (!changed) return cur;
    }
    return cur;  // cap reached; sweeps are monotone so this is still valid output
}

Graph balance_pendants(const Graph& g, int u, int v, int a, int b) {
    require_vertex(g, u, "balance_pendants");
    require_vertex(g, v, "balance_pendants");
    if (u == v) throw std::invalid_argument("balance_pendants: u == v");
    if (a < b || b < 0) throw std::invalid_argument("balance_pendants: need a >= b >= 0");
    auto pendants_of = [&](int x) {
        std::vector<int> p;
        for (int w : g.neighbors(x)) {
            if (g.degree(w) == 1) p.push_back(w);
        }
        return p;
    };
    std::vector<int> pu = pendants_of(u), pv = pendants_of(v);
    if (static_cast<int>(pu.size()) != a || static_cast<int>(pv.size()) != b)
        throw std::invalid_argument("balance_pendants: pendant counts do not match (a, b)");
    if (a == b) return g;
    if (std::find(pu.begin(), pu.end(), v) != pu.end() ||
        std::find(pv.begin(), pv.end(), u) != pv.end())
        throw std::invalid_argument("balance_pendants: u and v are each other's pendants");

    // Symmetry certificate: with all a+b pendants removed, deleting u or v
    // from the base must leave isomorphic graphs.
    std::vector<int> drop(pu);
    drop.insert(drop.end(), pv.begin(), pv.end());
    std::sort(drop.begin(), drop.end());
    Graph base = remove_vertices(g, drop);
    auto compact = [&](int x) {
        int shift = 0;
        for (int dvx : drop) {
            if (dvx < x) ++shift;
        }
        return x - shift;
    };
    Graph base_wo_u = remove_vertex(base, compact(u));
    Graph base_wo_v = remove_vertex(base, compact(v));
    if (base_wo_u.num_vertices() > kCanonicalCap)
        throw std::invalid_argument("balance_pendants: base too large for isomorphism check");
    if (!isomorphic(base_wo_u, base_wo_v))
        throw std::invalid_argument("balance_pendants: base is not symmetric in u and v");

    int moved = pu.front();  // lowest-id pendant of u
    return with_edge(without_edge(g, u, moved), v, moved);
}

}  // namespace rhomin

#include "rhomin/domination.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>

namespace rhomin {

namespace {

constexpr int kSubsetCap = 24;
constexpr int kInf = std::numeric_limits<int>::max() / 4;

// DP states per vertex, relative to the tree rooted at 0:
//   0: v in the set;  1: v out, dominated by a child;  2: v out, needs parent.
struct TreeDp {
    std::vector<std::array<int, 3>> dp;
    std::vector<int> parent, order;
};

TreeDp run_tree_dp(const Graph& t) {
    int n = t.num_vertices();
    TreeDp r;
    r.dp.assign(n, {0, 0, 0});
    r.parent.assign(n, -2);
    r.order.reserve(n);
    r.order.push_back(0);
    r.parent[0] = -1;
    for (size_t i = 0; i < r.order.size(); ++i) {
        for (int w : t.neighbors(r.order[i])) {
            if (r.parent[w] == -2) {
                r.parent[w] = r.order[i];
                r.order.push_back(w);
            }
        }
    }
    for (size_t i = r.order.size(); i-- > 0;) {
        int v = r.order[i];
        int in_set = 1, out_needs_parent = 0, best_delta = kInf;
        for (int w : t.neighbors(v)) {
            if (w == r.parent[v]) continue;
            const auto& c = r.dp[w];
            in_set += std::min({c[0], c[1], c[2]});
            int covered = std::min(c[0], c[1]);
            out_needs_parent += covered;
            best_delta = std::min(best_delta, c[0] - covered);
        }
        int out_dominated = (best_delta == kInf) ? kInf : out_needs_parent + best_delta;
        if (out_dominated > kInf) out_dominated = kInf;
        r.dp[v] = {in_set, out_dominated, out_needs_parent};
    }
    return r;
}

void reconstruct(const Graph& t, const TreeDp& r, int v, int state, std::vector<int>& set) {
    if (state == 0) set.push_back(v);
    int dominator = -1;
    if (state == 1) {
        // Lowest-id child achieving the minimal extra cost of being in-set.
        int best_delta = kInf;
        for (int w : t.neighbors(v)) {
            if (w == r.parent[v]) continue;
            int delta = r.dp[w][0] - std::min(r.dp[w][0], r.dp[w][1]);
            if (delta < best_delta) {
                best_delta = delta;
                dominator = w;
            }
        }
    }
    for (int w : t.neighbors(v)) {
        if (w == r.parent[v]) continue;
        const auto& c = r.dp[w];
        int child_state;
        if (w == dominator) {
            child_state = 0;
        } else if (state == 0) {
            child_state = (c[0] <= c[1] && c[0] <= c[2]) ? 0 : (c[1] <= c[2] ? 1 : 2);
        } else {
            child_state = (c[0] <= c[1]) ? 0 : 1;
        }
        reconstruct(t, r, w, child_state, set);
    }
}

struct SubsetSearch {
    int n = 0;
    uint32_t full = 0;
    std::vector<uint32_t> closed;  // N[v]
    int max_closed = 1;
    std::vector<int> chosen;
    std::vector<int> best;

    bool extend(uint32_t dominated, int remaining) {
        if (dominated == full) {
            best = chosen;
            return true;
        }
        if (remaining == 0) return false;
        uint32_t undominated = full & ~dominated;
        if (std::popcount(undominated) > remaining * max_closed) return false;
        int u = std::countr_zero(undominated);
        uint32_t cand = closed[u];
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            chosen.push_back(w);
            if (extend(dominated | closed[w], remaining - 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

DominationCertificate subset_search(const Graph& g) {
    int n = g.num_vertices();
    if (n > kSubsetCap) throw std::invalid_argument("domination_number: graph too large");
    SubsetSearch s;
    s.n = n;
    s.full = (n == 32) ? ~uint32_t{0} : ((uint32_t{1} << n) - 1);
    s.closed.resize(n);
    for (int v = 0; v < n; ++v) {
        uint32_t m = uint32_t{1} << v;
        for (int w : g.neighbors(v)) m |= uint32_t{1} << w;
        s.closed[v] = m;
        s.max_closed = std::max(s.max_closed, std::popcount(m));
    }
    for (int k = 1; k <= n; ++k) {
        s.chosen.clear();
        if (s.extend(0, k)) {
            std::sort(s.best.begin(), s.best.end());
            return {k, s.best, "subset-search"};
        }
    }
    return {n, {}, "subset-search"};  // unreachable: V always dominates
}

}  // namespace

DominationCertificate domination_number_tree(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("domination_number_tree: input is not a tree");
    if (t.num_vertices() == 1) return {1, {0}, "tree-dp"};
    TreeDp r = run_tree_dp(t);
    const auto& root = r.dp[0];
    int state = (root[0] <= root[1]) ? 0 : 1;
    DominationCertificate cert;
    cert.gamma = std::min(root[0], root[1]);
    cert.method = "tree-dp";
    reconstruct(t, r, 0, state, cert.witness);
    std::sort(cert.witness.begin(), cert.witness.end());
    return cert;
}

DominationCertificate domination_number(const Graph& g) {
    if (g.num_vertices() == 0) throw std::invalid_argument("domination_number: empty graph");
    if (is_tree(g)) return domination_number_tree(g);
    return subset_search(g);
}

bool is_dominating_set(const Graph& g, const std::vector<int>& d) {
    int n = g.num_vertices();
    std::vector<char> covered(n, 0);
    for (int v : d) {
        if (v < 0 || v >= n) throw std::invalid_argument("is_dominating_set: vertex out of range");
        covered[v] = 1;
        for (int w : g.neighbors(v)) covered[w] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

std::vector<int> support_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.num_vertices(); ++v) {
        for (int w : g.neighbors(v)) {
            if (g.degree(w) == 1) {
                out.push_back(v);
                break;
            }
        }
    }
    return out;
}

std::vector<int> support_min_dominating_set(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("support_min_dominating_set: input is not a tree");
    DominationCertificate cert = domination_number_tree(t);
    std::vector<char> in_set(t.num_vertices(), 0);
    for (int v : cert.witness) in_set[v] = 1;
    std::vector<int> supports = support_vertices(t);
    auto support_count = [&] {
        int c = 0;
        for (int s : supports) c += in_set[s];
        return c;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int u : supports) {
            if (in_set[u]) continue;
            // Every pendant neighbor of u must be inside the set (otherwise
            // it would be undominated); swapping them for u keeps the size
            // minimum and domination intact.
            std::vector<int> pendants;
            for (int w : t.neighbors(u)) {
                if (t.degree(w) == 1 && in_set[w]) pendants.push_back(w);
            }
            if (pendants.empty()) continue;
            int before = support_count();
            for (int w : pendants) in_set[w] = 0;
            in_set[u] = 1;
            if (support_count() <= before) {  // P2-style degenerate swap: undo
                in_set[u] = 0;
                for (int w : pendants) in_set[w] = 1;
                continue;
            }
            changed = true;
        }
    }
    std::vector<int> out;
    for (int v = 0; v < t.num_vertices(); ++v) {
        if (in_set[v]) out.push_back(v);
    }
    return out;
}

int min_pairwise_distance(const Graph& g, const std::vector<int>& d) {
    if (d.size() < 2)
        throw std::invalid_argument("min_pairwise_distance: need at least two vertices");
    int best = kInf;
    for (size_t i = 0; i < d.size(); ++i) {
        for (size_t j = i + 1; j < d.size(); ++j) {
            auto dist = distance(g, d[i], d[j]);
            if (!dist) throw std::invalid_argument("min_pairwise_distance: vertices disconnected");
            best = std::min(best, *dist);
        }
    }
    return best;
}

bool heavy_dominator_exists(const Graph& g, const std::vector<int>& d) {
    std::vector<char> in_set(g.num_vertices(), 0);
    for (int v : d) in_set[v] = 1;
    for (int v : d) {
        int outside = 0;
        for (int w : g.neighbors(v)) outside += !in_set[w];
        if (outside >= 3) return true;
    }
    return false;
}

Graph dominating_spanning_tree(const Graph& g, const std::vector<int>& d) {
    int n = g.num_vertices();
    if (!is_connected(g))
        throw std::invalid_argument("dominating_spanning_tree: graph must be connected");
    if (!is_dominating_set(g, d))
        throw std::invalid_argument("dominating_spanning_tree: d does not dominate g");
    std::vector<char> in_set(n, 0);
    for (int v : d) in_set[v] = 1;

    std::vector<int> comp(n);
    for (int v = 0; v < n; ++v) comp[v] = v;
    auto find = [&](int v) {
        while (comp[v] != v) {
            comp[v] = comp[comp[v]];
            v = comp[v];
        }
        return v;
    };

    std::vector<std::pair<int, int>> chosen;
    // Star phase: attach every outside vertex to its lowest-id dominator.
    for (int v = 0; v < n; ++v) {
        if (in_set[v]) continue;
        for (int w : g.neighbors(v)) {
            if (in_set[w]) {
                chosen.emplace_back(std::min(v, w), std::max(v, w));
                comp[find(v)] = find(w);
                break;  // neighbors are ascending, so this is the lowest id
            }
        }
    }
    // Completion phase: greedily add remaining edges in sorted order.
    for (auto [u, v] : g.edges()) {
        if (find(u) == find(v)) continue;
        comp[find(u)] = find(v);
        chosen.emplace_back(u, v);
    }
    Graph t = build_graph(n, chosen);
    if (!is_tree(t)) throw std::logic_error("dominating_spanning_tree: construction failed");
    return t;
}

std::vector<std::vector<int>> all_min_dominating_sets(const Graph& g) {
    int n = g.num_vertices();
    if (n > kSubsetCap)
        throw std::invalid_argument("all_min_dominating_sets: graph too large");
    int gamma = domination_number(g).gamma;
    std::vector<uint32_t> closed(n);
    for (int v = 0; v < n; ++v) {
        uint32_t m = uint32_t{1} << v;
        for (int w : g.neighbors(v)) m |= uint32_t{1} << w;
        closed[v] = m;
    }
    uint32_t full = (uint32_t{1} << n) - 1;
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // Enumerate k-subsets in lexicographic order and keep the dominating ones.
    auto rec = [&](auto&& self, int first, uint32_t dominated) -> void {
        if (static_cast<int>(cur.size()) == gamma) {
            if (dominated == full) out.push_back(cur);
            return;
        }
        int remaining = gamma - static_cast<int>(cur.size());
        for (int v = first; v + remaining <= n; ++v) {
            cur.push_back(v);
            self(self, v + 1, dominated | closed[v]);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace rhomin

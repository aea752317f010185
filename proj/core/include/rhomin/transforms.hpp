#ifndef RHOMIN_TRANSFORMS_HPP
#define RHOMIN_TRANSFORMS_HPP

#include <utility>
#include <vector>

#include "rhomin/graph.hpp"

namespace rhomin {

// Maximal path whose endpoints branch (degree >= 3) and whose interior
// vertices have degree exactly 2.  For non-tree inputs the two endpoints may
// coincide (a cycle hanging at one branching vertex).
struct InternalPath {
    std::vector<int> vertices;  // v1 .. vt, consecutive adjacent
};

std::vector<InternalPath> internal_paths(const Graph& g);

// Maximal path u -> v1 -> ... -> vl leaving a branching vertex u through
// degree-2 vertices and ending at a leaf; stored without u.
struct PendantPath {
    std::vector<int> vertices;
};

std::vector<PendantPath> pendant_paths_at(const Graph& g, int u);

// Insert k (1 or 2) fresh degree-2 vertices (ids n, n+1) into an edge.
Graph subdivide(const Graph& g, std::pair<int, int> edge, int k);

// Move the far endpoint of the shorter pendant path at v onto the end of the
// longer one: G_{s,t} -> G_{s-1,t+1}.  Requires 1 <= s <= t.
Graph slide_path(const Graph& g, int v, const std::vector<int>& s_path,
                 const std::vector<int>& t_path);

// Replace edges v-w by u-w for every w in ws; requires ws within N(v)\N(u),
// u not in ws, u != v.
Graph shift_edges(const Graph& g, int u, int v, const std::vector<int>& ws);

// Pendant-path consolidation at a branching vertex u of a tree with respect
// to a dominating set d.  With the longest path kept in place (ties by
// lexicographically least vertex sequence):
//   tr1 (u in d):     each other path keeps its first vertex at u and its
//                     tail re-roots at the end of the longest path; length-1
//                     paths have no tail and stay put.
//   tr2 (u not in d): each other path moves whole to the end of the longest.
Graph tr1(const Graph& t, const std::vector<int>& d, int u);
Graph tr2(const Graph& t, const std::vector<int>& d, int u);

// Sweep tr2 over branching vertices outside d (ascending), then tr1 over
// branching vertices in d, repeating both phases to a fixed point.
Graph diamond_reduce(const Graph& t, const std::vector<int>& d);

// Move one pendant edge from u (holding a of them) to v (holding b), given
// the symmetry certificate base-u isomorphic to base-v, where base is the
// graph with those a+b pendants removed.  a >= b >= 0; a == b is an identity.
Graph balance_pendants(const Graph& g, int u, int v, int a, int b);

}  // namespace rhomin

#endif

#ifndef RHOMIN_DOMINATION_HPP
#define RHOMIN_DOMINATION_HPP

#include <string>
#include <vector>

#include "rhomin/graph.hpp"

namespace rhomin {

struct DominationCertificate {
    int gamma = 0;
    std::vector<int> witness;  // a minimum dominating set, ascending ids
    std::string method;        // "tree-dp" or "subset-search"
};

// Exact domination number.  Trees of any size go through the linear DP;
// everything else through branch-and-bound subset search, capped at n <= 24.
DominationCertificate domination_number(const Graph& g);

// Three-state tree DP with deterministic witness reconstruction.
DominationCertificate domination_number_tree(const Graph& t);

bool is_dominating_set(const Graph& g, const std::vector<int>& d);

// Vertices adjacent to at least one leaf.
std::vector<int> support_vertices(const Graph& g);

// Minimum dominating set of a tree containing every support vertex, built
// from the DP witness by swapping a non-chosen support for its pendant
// neighbor; each swap strictly increases the support count, so it stops.
std::vector<int> support_min_dominating_set(const Graph& t);

// Smallest pairwise distance within d; requires |d| >= 2 and connectivity.
int min_pairwise_distance(const Graph& g, const std::vector<int>& d);

// True when some v in d has >= 3 neighbors outside d.
bool heavy_dominator_exists(const Graph& g, const std::vector<int>& d);

// Spanning tree in which d still dominates: star edges from every outside
// vertex to its lowest-id dominator, completed greedily over sorted edges.
Graph dominating_spanning_tree(const Graph& g, const std::vector<int>& d);

// Every minimum dominating set, ascending lexicographic order (n <= 24).
std::vector<std::vector<int>> all_min_dominating_sets(const Graph& g);

}  // namespace rhomin

#endif

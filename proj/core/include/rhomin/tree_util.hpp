#ifndef RHOMIN_TREE_UTIL_HPP
#define RHOMIN_TREE_UTIL_HPP

#include <string>
#include <vector>

#include "rhomin/graph.hpp"

namespace rhomin {

// Centroid vertex (or the two of them, ascending) of a tree: minimizes the
// largest component left by deleting the vertex.
std::vector<int> tree_centroids(const Graph& t);

// Canonical string code of a rooted tree: children codes sorted and wrapped.
// Equal codes <=> rooted isomorphism.
std::string ahu_code_rooted(const Graph& t, int root);

// Canonical string code of a free tree (rooted at its centroid; for a
// bicentroidal tree, at the centroid edge).  Equal codes <=> isomorphism.
std::string ahu_code(const Graph& t);

}  // namespace rhomin

#endif

#ifndef RHOMIN_CHARPOLY_HPP
#define RHOMIN_CHARPOLY_HPP

#include "rhomin/graph.hpp"
#include "rhomin/intpoly.hpp"
#include "rhomin/roots.hpp"

namespace rhomin {

// Characteristic polynomial of the adjacency matrix (monic, integer).
// Tree route: split at a centroid edge e = uv of each tree component,
//   phi(T) = phi(A) phi(B) - phi(A - u) phi(B - v),
// with results memoized on canonical rooted-tree codes.
IntPoly char_poly_tree(const Graph& t);

// General graphs via the Faddeev-LeVerrier recurrence in exact integer
// arithmetic; every division in the trace step is exact.  Capped at n <= 32.
IntPoly char_poly_general(const Graph& g);

// Tree route when possible, general route otherwise.
IntPoly char_poly(const Graph& g);

struct RhoComparison {
    enum class Tie { none, isomorphic, cospectral };
    Ordering order;
    Tie tie;
};

// Exact comparison of spectral radii of two connected graphs.  On a tie the
// graphs are reported as isomorphic or as cospectral-at-the-top.
RhoComparison compare_rho_exact(const Graph& a, const Graph& b);

}  // namespace rhomin

#endif

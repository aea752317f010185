#ifndef RHOMIN_FAMILIES_HPP
#define RHOMIN_FAMILIES_HPP

#include <string>
#include <vector>

#include "rhomin/graph.hpp"
#include "rhomin/intpoly.hpp"

namespace rhomin {

// All constructors use frozen vertex layouts, documented per function, so
// that vertex ids in reports and tests are stable.

// Star on n >= 1 vertices; the center is vertex 0.
Graph star(int n);

// Path on n >= 1 vertices: 0 - 1 - ... - (n-1).
Graph path(int n);

// Double broom on a 4-path: path 0-1-2-3 with floor(n/2)-2 pendants at 0
// and ceil(n/2)-2 pendants at 3; n >= 4 (n in {4,5,6} degenerates to P_n).
Graph h_graph(int n);

// Double-broom with a hub triangle-free center: spine 0-3-4-5-2 plus the
// edge 4-1; pendant counts a at 0, b at 1, c at 2 (a, c >= 1, b >= 0).
// Pendants are appended starting at id 6.
Graph g1(int a, int b, int c);

// Long double-broom: spine 0-3-4-1-5-6-2 (so the outer hubs 0 and 2 are at
// distances 3 and 6 from hub 1); pendant counts a at 0, b at 1, c at 2
// (a, c >= 1, b >= 0).  Pendants are appended starting at id 7.
Graph g2(int a, int b, int c);

// Path on n-4 vertices (ids 0..n-5) with two pendants at each end:
// {n-4, n-3} attached to 0 and {n-2, n-1} attached to n-5; n >= 6.
// Its spectral radius is exactly 2 (subdivision fixed point).
Graph w_graph(int n);

// Corona H1 o H2: one copy of H2 per vertex of H1, joined completely to it.
// H1 keeps ids 0..n1-1; copy i occupies ids n1 + i*n2 ... n1 + (i+1)*n2 - 1.
Graph corona(const Graph& h1, const Graph& h2);

// P_{n/2} o K_1 for even n >= 2: the comb with spine ids 0..n/2-1 and the
// pendant of spine vertex i at id n/2 + i.
Graph p_half_corona(int n);

// Odd-order variant of the comb, n = 2k+1 >= 5: take P_k o K_1 and
// subdivide the pendant edge at spine end 0 (the new vertex gets id n-1).
Graph h_prime(int n);

// Name-based dispatcher used by the CLI: star/path/h/g1/g2/w/p_half_corona/h_prime.
Graph make_family(const std::string& name, const std::vector<int>& params);

// Factored characteristic-polynomial families in mu = lambda^2 for the long
// double-broom minimizers on n vertices (see f_identity checks):
//   which = 1: matches g2(a, n-2a-7, a)        for a >= 1, n >= 2a+7
//   which = 2: matches g2(a, n-2a-6, a-1)      for a >= 2, n >= 2a+6
//   which = 3: matches g2(a-1, n-2a-5, a-1)    for a >= 2, n >= 2a+5
IntPoly f_poly(int which, int a, int n);

struct DifferencePolynomials {
    IntPoly psi[4];   // f2-f3 at n=3a+2, 3a+3; f2-f1 at n=3a+4, 3a+5
    IntPoly phi;      // f1 - f3 at the given n
    std::vector<double> psi_roots[4];  // closed-form real roots, ascending
    std::vector<double> phi_roots;
};

// Difference polynomials that decide the boundary cases between the three
// f-families, with their closed-form roots evaluated in long double.
DifferencePolynomials difference_polynomials(int a, int n);

}  // namespace rhomin

#endif

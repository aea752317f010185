#include "rhomin/charpoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "rhomin/canonical.hpp"
#include "rhomin/tree_util.hpp"

namespace rhomin {

namespace {

constexpr int kGeneralCap = 32;

using Memo = std::unordered_map<std::string, IntPoly>;

IntPoly phi_tree(const Graph& t, Memo& memo);

IntPoly phi_forest(const Graph& f, Memo& memo) {
    IntPoly result = IntPoly::constant(1);
    for (const auto& comp : connected_components(f)) {
        result = result * phi_tree(induced_subgraph(f, comp), memo);
    }
    return result;
}

// Index of vertex v inside the sorted vertex list that produced a compacted
// induced subgraph.
int compact_index(const std::vector<int>& sorted_vertices, int v) {
    return static_cast<int>(std::lower_bound(sorted_vertices.begin(), sorted_vertices.end(), v) -
                            sorted_vertices.begin());
}

// Edge of the tree whose worse side is smallest; ties go to the
// lexicographically least (u, v) with u < v.
std::pair<int, int> centroid_edge(const Graph& t) {
    int n = t.num_vertices();
    std::vector<int> parent(n, -2), order;
    order.reserve(n);
    order.push_back(0);
    parent[0] = -1;
    for (size_t i = 0; i < order.size(); ++i) {
        for (int w : t.neighbors(order[i])) {
            if (parent[w] == -2) {
                parent[w] = order[i];
                order.push_back(w);
            }
        }
    }
    std::vector<int> size(n, 1);
    for (size_t i = order.size(); i-- > 1;) size[parent[order[i]]] += size[order[i]];
    std::pair<int, int> best{-1, -1};
    int best_weight = n + 1;
    for (int v = 1; v < n; ++v) {
        int u = parent[v];
        int weight = std::max(size[v], n - size[v]);
        std::pair<int, int> e{std::min(u, v), std::max(u, v)};
        if (weight < best_weight || (weight == best_weight && e < best)) {
            best_weight = weight;
            best = e;
        }
    }
    return best;
}

IntPoly phi_tree(const Graph& t, Memo& memo) {
    int n = t.num_vertices();
    if (n == 0) return IntPoly::constant(1);
    if (n == 1) return IntPoly::x();
    if (n == 2) return IntPoly{-1, 0, 1};
    std::string key = ahu_code(t);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    auto [u, v] = centroid_edge(t);
    Graph cut = without_edge(t, u, v);
    std::vector<std::vector<int>> comps = connected_components(cut);
    bool u_first = std::binary_search(comps[0].begin(), comps[0].end(), u);
    const std::vector<int>& side_u = u_first ? comps[0] : comps[1];
    const std::vector<int>& side_v = u_first ? comps[1] : comps[0];

    Graph a = induced_subgraph(cut, side_u);
    Graph b = induced_subgraph(cut, side_v);
    int ua = compact_index(side_u, u);
    int vb = compact_index(side_v, v);
    IntPoly phi = phi_tree(a, memo) * phi_tree(b, memo) -
                  phi_forest(remove_vertex(a, ua), memo) * phi_forest(remove_vertex(b, vb), memo);
    memo.emplace(std::move(key), phi);
    return phi;
}

}  // namespace

IntPoly char_poly_tree(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("char_poly_tree: input is not a tree");
    Memo memo;
    return phi_tree(t, memo);
}

IntPoly char_poly_general(const Graph& g) {
    int n = g.num_vertices();
    if (n > kGeneralCap) throw std::invalid_argument("char_poly_general: graph too large");
    if (n == 0) return IntPoly::constant(1);
    // Faddeev-LeVerrier: M_0 = I; c_{n-k} = -tr(A M_{k-1}) / k;
    // M_k = A M_{k-1} + c_{n-k} I.  All divisions are exact over Z.
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, mpz_class(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    std::vector<mpz_class> c(static_cast<size_t>(n) + 1, mpz_class(0));
    c[static_cast<size_t>(n)] = 1;
    for (int k = 1; k <= n; ++k) {
        std::vector<std::vector<mpz_class>> am(n, std::vector<mpz_class>(n, mpz_class(0)));
        for (int i = 0; i < n; ++i) {
            for (int nb : g.neighbors(i)) {
                for (int j = 0; j < n; ++j) am[i][j] += m[nb][j];
            }
        }
        mpz_class trace = 0;
        for (int i = 0; i < n; ++i) trace += am[i][i];
        mpz_class ck;
        mpz_class kz(k);
        mpz_divexact(ck.get_mpz_t(), trace.get_mpz_t(), kz.get_mpz_t());
        ck = -ck;
        c[static_cast<size_t>(n - k)] = ck;
        for (int i = 0; i < n; ++i) am[i][i] += ck;
        m = std::move(am);
    }
    return IntPoly(std::move(c));
}

IntPoly char_poly(const Graph& g) {
    if (is_tree(g)) return char_poly_tree(g);
    return char_poly_general(g);
}

RhoComparison compare_rho_exact(const Graph& a, const Graph& b) {
    if (!is_connected(a) || !is_connected(b))
        throw std::invalid_argument("compare_rho_exact: graphs must be connected");
    Ordering ord = compare_largest_roots(char_poly(a), char_poly(b));
    RhoComparison r{ord, RhoComparison::Tie::none};
    if (ord == Ordering::Equal) {
        bool iso = a.num_vertices() == b.num_vertices() &&
                   a.num_vertices() <= kCanonicalCap && isomorphic(a, b);
        r.tie = iso ? RhoComparison::Tie::isomorphic : RhoComparison::Tie::cospectral;
    }
    return r;
}

}  // namespace rhomin

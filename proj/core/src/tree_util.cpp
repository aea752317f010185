#include "rhomin/tree_util.hpp"

#include <algorithm>
#include <stdexcept>

namespace rhomin {

namespace {

// Subtree sizes for the tree rooted at root; parent[root] = -1.
void root_tree(const Graph& t, int root, std::vector<int>& parent, std::vector<int>& order) {
    int n = t.num_vertices();
    parent.assign(n, -2);
    order.clear();
    order.reserve(n);
    order.push_back(root);
    parent[root] = -1;
    for (size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int w : t.neighbors(v)) {
            if (parent[w] == -2) {
                parent[w] = v;
                order.push_back(w);
            }
        }
    }
}

std::string code_below(const Graph& t, int v, int parent) {
    std::vector<std::string> kids;
    for (int w : t.neighbors(v)) {
        if (w != parent) kids.push_back(code_below(t, w, v));
    }
    std::sort(kids.begin(), kids.end());
    std::string code = "(";
    for (const auto& k : kids) code += k;
    code += ")";
    return code;
}

}  // namespace

std::vector<int> tree_centroids(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("tree_centroids: input is not a tree");
    int n = t.num_vertices();
    if (n == 1) return {0};
    std::vector<int> parent, order, size(n, 1);
    root_tree(t, 0, parent, order);
    for (size_t i = order.size(); i-- > 1;) size[parent[order[i]]] += size[order[i]];
    std::vector<int> best;
    int best_weight = n + 1;
    for (int v = 0; v < n; ++v) {
        int weight = n - size[v];  // component through the parent
        for (int w : t.neighbors(v)) {
            if (w != parent[v]) weight = std::max(weight, size[w]);
        }
        if (parent[v] == -1) {
            weight = 0;
            for (int w : t.neighbors(v)) weight = std::max(weight, size[w]);
        }
        if (weight < best_weight) {
            best_weight = weight;
            best = {v};
        } else if (weight == best_weight) {
            best.push_back(v);
        }
    }
    std::sort(best.begin(), best.end());
    return best;
}

std::string ahu_code_rooted(const Graph& t, int root) {
    if (!is_tree(t)) throw std::invalid_argument("ahu_code_rooted: input is not a tree");
    if (root < 0 || root >= t.num_vertices())
        throw std::invalid_argument("ahu_code_rooted: root out of range");
    return code_below(t, root, -1);
}

std::string ahu_code(const Graph& t) {
    std::vector<int> c = tree_centroids(t);
    if (c.size() == 1) return "[" + ahu_code_rooted(t, c[0]) + "]";
    // Bicentroidal: the two centroids are adjacent; code each half from its
    // centroid with the other half cut away, then order the halves.
    std::string a = code_below(t, c[0], c[1]);
    std::string b = code_below(t, c[1], c[0]);
    if (b < a) std::swap(a, b);
    return "[" + a + b + "]";
}

}  // namespace rhomin

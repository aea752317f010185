// Isomorph-free enumeration checked against two independent oracles built
// here from first principles: every labeled tree via Prüfer sequences, and
// every labeled graph via exhaustive edge masks, both collapsed through
// canonical codes.

#include <doctest.h>

#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "rhomin/canonical.hpp"
#include "rhomin/domination.hpp"
#include "rhomin/enumerate.hpp"
#include "rhomin/graph.hpp"
#include "rhomin/graph6.hpp"

using namespace rhomin;

namespace {

// Decode a Prüfer sequence into its labeled tree.
Graph prufer_tree(int n, const std::vector<int>& seq) {
    std::vector<int> deg(n, 1);
    for (int x : seq) ++deg[x];
    std::vector<std::pair<int, int>> edges;
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    for (int x : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back({std::min(leaf, x), std::max(leaf, x)});
        if (--deg[x] == 1) leaves.insert(x);
    }
    int u = *leaves.begin(), v = *leaves.rbegin();
    edges.push_back({u, v});
    return build_graph(n, edges);
}

std::set<std::string> all_labeled_tree_codes(int n) {
    std::set<std::string> codes;
    int count = 1;
    for (int i = 0; i < n - 2; ++i) count *= n;
    for (int idx = 0; idx < count; ++idx) {
        std::vector<int> seq(n - 2);
        int x = idx;
        for (int i = 0; i < n - 2; ++i, x /= n) seq[i] = x % n;
        codes.insert(canonical_code(prufer_tree(n, seq)).bytes);
    }
    return codes;
}

std::set<std::string> all_connected_mask_codes(int n) {
    std::set<std::string> codes;
    int bits = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        std::vector<std::pair<int, int>> e;
        int b = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++b)
                if (mask & (1u << b)) e.push_back({u, v});
        Graph g = build_graph(n, e);
        if (is_connected(g)) codes.insert(canonical_code(g).bytes);
    }
    return codes;
}

}  // namespace

TEST_CASE("free tree counts match the classical sequence") {
    const std::uint64_t want[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159};
    for (int n = 1; n <= 14; ++n) CHECK(count_free_trees(n) == want[n - 1]);
}

TEST_CASE("connected graph counts match the classical sequence") {
    const std::uint64_t want[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) CHECK(count_connected_graphs(n) == want[n - 1]);
}

TEST_CASE("tree stream equals the Prufer universe up to isomorphism") {
    for (int n = 2; n <= 7; ++n) {
        std::set<std::string> want = all_labeled_tree_codes(n);
        std::set<std::string> got;
        FreeTreeStream s(n);
        Graph t;
        while (s.next(t)) {
            CHECK(t.num_vertices() == n);
            CHECK(is_tree(t));
            CHECK(got.insert(canonical_code(t).bytes).second);  // no repeats
        }
        CHECK(got == want);
    }
}

TEST_CASE("connected stream equals the edge-mask universe up to isomorphism") {
    for (int n = 1; n <= 6; ++n) {
        std::set<std::string> want = all_connected_mask_codes(n);
        std::set<std::string> got;
        ConnectedGraphStream s(n);
        Graph g;
        while (s.next(g)) {
            CHECK(g.num_vertices() == n);
            CHECK(is_connected(g));
            CHECK(got.insert(canonical_code(g).bytes).second);
        }
        CHECK(got == want);
    }
}

TEST_CASE("streams are deterministic and ordered by edge count") {
    std::vector<std::string> first, second;
    {
        ConnectedGraphStream s(6);
        Graph g;
        int last_m = 0;
        while (s.next(g)) {
            CHECK(g.num_edges() >= last_m);
            last_m = g.num_edges();
            first.push_back(emit_graph6(canonical_form(g)));
        }
    }
    {
        ConnectedGraphStream s(6);
        Graph g;
        while (s.next(g)) second.push_back(emit_graph6(canonical_form(g)));
    }
    CHECK(first == second);

    std::vector<std::string> t1, t2;
    {
        FreeTreeStream s(9);
        Graph t;
        while (s.next(t)) t1.push_back(emit_graph6(t));
    }
    {
        FreeTreeStream s(9);
        Graph t;
        while (s.next(t)) t2.push_back(emit_graph6(t));
    }
    CHECK(t1 == t2);
    CHECK(t1.size() == 47);
}

TEST_CASE("class queries filter by domination number") {
    // gamma partition of the 11 free trees on 7 vertices: 1+5+5.
    std::vector<std::uint64_t> sizes;
    for (int gamma = 1; gamma <= 3; ++gamma) {
        std::uint64_t c = 0;
        ClassQuery q;
        q.n = 7;
        q.gamma = gamma;
        q.trees_only = true;
        class_members(q, [&](const Graph& t) {
            CHECK(domination_number(t).gamma == gamma);
            ++c;
        });
        sizes.push_back(c);
    }
    CHECK(sizes[0] + sizes[1] + sizes[2] == count_free_trees(7));
    CHECK(sizes[0] == 1);  // only the star has gamma = 1
    CHECK(sizes[2] == 5);

    // Unfiltered query covers the whole class.
    std::uint64_t all = 0;
    ClassQuery q;
    q.n = 6;
    q.trees_only = false;
    class_members(q, [&](const Graph&) { ++all; });
    CHECK(all == count_connected_graphs(6));
}

TEST_CASE("tiny orders and caps") {
    FreeTreeStream one(1);
    Graph g;
    CHECK(one.next(g));
    CHECK(g.num_vertices() == 1);
    CHECK_FALSE(one.next(g));

    ConnectedGraphStream two(2);
    CHECK(two.next(g));
    CHECK(g.num_edges() == 1);
    CHECK_FALSE(two.next(g));

    CHECK_THROWS_AS(FreeTreeStream(kFreeTreeCap + 1), std::invalid_argument);
    CHECK_THROWS_AS(ConnectedGraphStream(kConnectedGraphCap + 1), std::invalid_argument);
    CHECK_THROWS_AS(FreeTreeStream(0), std::invalid_argument);
}

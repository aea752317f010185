// Exact domination: the tree DP and the subset search are both checked
// against a from-scratch brute force written here (all 2^n subsets), plus
// closed forms for paths and frozen values for the named families.

#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "rhomin/domination.hpp"
#include "rhomin/enumerate.hpp"
#include "rhomin/families.hpp"
#include "rhomin/graph.hpp"

using namespace rhomin;

namespace {

// Independent oracle: minimum dominating set by exhaustive subset scan.
int brute_gamma(const Graph& g) {
    int n = g.num_vertices();
    std::vector<unsigned> closed(n);
    for (int v = 0; v < n; ++v) {
        closed[v] = 1u << v;
        for (int u : g.neighbors(v)) closed[v] |= 1u << u;
    }
    unsigned full = n == 32 ? ~0u : (1u << n) - 1;
    int best = n;
    for (unsigned s = 1; s <= full; ++s) {
        unsigned cover = 0;
        for (int v = 0; v < n; ++v)
            if (s & (1u << v)) cover |= closed[v];
        if (cover == full) best = std::min(best, __builtin_popcount(s));
    }
    return best;
}

int brute_count_min_sets(const Graph& g) {
    int n = g.num_vertices(), gamma = brute_gamma(g);
    std::vector<unsigned> closed(n);
    for (int v = 0; v < n; ++v) {
        closed[v] = 1u << v;
        for (int u : g.neighbors(v)) closed[v] |= 1u << u;
    }
    unsigned full = (1u << n) - 1;
    int count = 0;
    for (unsigned s = 1; s <= full; ++s) {
        if (__builtin_popcount(s) != gamma) continue;
        unsigned cover = 0;
        for (int v = 0; v < n; ++v)
            if (s & (1u << v)) cover |= closed[v];
        if (cover == full) ++count;
    }
    return count;
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return build_graph(n, e);
}

Graph random_tree(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.push_back({static_cast<int>(rng() % i), i});
    return build_graph(n, e);
}

}  // namespace

TEST_CASE("gamma matches brute force on every connected graph up to 7") {
    for (int n = 1; n <= 7; ++n) {
        ConnectedGraphStream s(n);
        Graph g;
        while (s.next(g)) {
            DominationCertificate c = domination_number(g);
            CHECK(c.gamma == brute_gamma(g));
            CHECK(static_cast<int>(c.witness.size()) == c.gamma);
            CHECK(is_dominating_set(g, c.witness));
            CHECK(std::is_sorted(c.witness.begin(), c.witness.end()));
        }
    }
}

TEST_CASE("tree DP matches brute force on every free tree up to 10") {
    for (int n = 1; n <= 10; ++n) {
        FreeTreeStream s(n);
        Graph t;
        while (s.next(t)) {
            DominationCertificate c = domination_number_tree(t);
            CHECK(c.gamma == brute_gamma(t));
            CHECK(is_dominating_set(t, c.witness));
            CHECK(c.method == "tree-dp");
            // The general entry point routes trees to the DP.
            CHECK(domination_number(t).gamma == c.gamma);
        }
    }
}

TEST_CASE("closed forms and named families") {
    for (int n = 1; n <= 24; ++n) CHECK(domination_number(path(n)).gamma == (n + 2) / 3);
    for (int n = 2; n <= 12; ++n) CHECK(domination_number(star(n)).gamma == 1);
    for (int n = 3; n <= 12; ++n) CHECK(domination_number(cycle(n)).gamma == (n + 2) / 3);
    for (int n = 7; n <= 14; ++n) CHECK(domination_number(h_graph(n)).gamma == 2);
    for (int a = 1; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) CHECK(domination_number(g2(a, b, a)).gamma == 3);
    for (int n = 6; n <= 14; n += 2) CHECK(domination_number(p_half_corona(n)).gamma == n / 2);
    for (int n = 5; n <= 15; n += 2) CHECK(domination_number(h_prime(n)).gamma == n / 2);
    CHECK(domination_number(cycle(6)).method == "subset-search");
}

TEST_CASE("support vertices and support-respecting minimum sets") {
    CHECK(support_vertices(path(1)).empty());
    CHECK(support_vertices(path(2)) == std::vector<int>{0, 1});
    CHECK(support_vertices(path(4)) == std::vector<int>{1, 2});
    CHECK(support_vertices(h_graph(8)) == std::vector<int>{0, 3});

    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 50; ++trial) {
        Graph t = random_tree(3 + static_cast<int>(rng() % 14), rng);
        std::vector<int> d = support_min_dominating_set(t);
        CHECK(static_cast<int>(d.size()) == domination_number(t).gamma);
        CHECK(is_dominating_set(t, d));
        for (int s : support_vertices(t))
            CHECK(std::binary_search(d.begin(), d.end(), s));
    }
}

TEST_CASE("pairwise distance within a set") {
    CHECK(min_pairwise_distance(path(7), {1, 4}) == 3);
    CHECK(min_pairwise_distance(path(7), {0, 6}) == 6);
    CHECK(min_pairwise_distance(path(7), {0, 1, 6}) == 1);
    CHECK_THROWS_AS(min_pairwise_distance(path(7), {3}), std::invalid_argument);
}

TEST_CASE("heavy dominator detection") {
    CHECK(heavy_dominator_exists(star(5), {0}));
    CHECK_FALSE(heavy_dominator_exists(path(5), {1, 3}));
    // Center of the spider has three outside neighbors.
    Graph spider = build_graph(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK(heavy_dominator_exists(spider, {0, 2, 4, 6}));
}

TEST_CASE("dominating spanning tree preserves domination") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + static_cast<int>(rng() % 6);
        // Connected non-tree: cycle plus chords.
        Graph g = cycle(n);
        for (int extra = 0; extra < 2; ++extra) {
            int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            if (u != v && !g.has_edge(u, v)) g = with_edge(g, u, v);
        }
        std::vector<int> d = domination_number(g).witness;
        Graph t = dominating_spanning_tree(g, d);
        CHECK(t.num_vertices() == n);
        CHECK(is_tree(t));
        CHECK(is_dominating_set(t, d));
        for (auto [u, v] : t.edges()) CHECK(g.has_edge(u, v));
    }
}

TEST_CASE("all minimum dominating sets, lexicographic") {
    CHECK(all_min_dominating_sets(path(3)) == std::vector<std::vector<int>>{{1}});
    CHECK(all_min_dominating_sets(path(4)) ==
          std::vector<std::vector<int>>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 25; ++trial) {
        Graph t = random_tree(2 + static_cast<int>(rng() % 9), rng);
        auto sets = all_min_dominating_sets(t);
        CHECK(static_cast<int>(sets.size()) == brute_count_min_sets(t));
        CHECK(std::is_sorted(sets.begin(), sets.end()));
        for (const auto& d : sets) {
            CHECK(is_dominating_set(t, d));
            CHECK(static_cast<int>(d.size()) == domination_number(t).gamma);
        }
    }
}

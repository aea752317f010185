// Graph container, graph6 codec, and canonical-labeling tests. graph6 byte
// values are hand-derived from the format definition so the codec is checked
// against the format, not against itself.

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "rhomin/canonical.hpp"
#include "rhomin/graph.hpp"
#include "rhomin/graph6.hpp"

using namespace rhomin;

namespace {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges()) e.push_back({perm[u], perm[v]});
    return build_graph(g.num_vertices(), e);
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> e;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) e.push_back({u, v});
    return build_graph(n, e);
}

Graph random_tree(int n, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.push_back({static_cast<int>(rng() % i), i});
    return build_graph(n, e);
}

}  // namespace

TEST_CASE("build_graph basics and validation") {
    Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {1, 2}});  // duplicate collapses
    CHECK(g.num_vertices() == 4);
    CHECK(g.num_edges() == 3);
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 3));
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});

    CHECK_THROWS_AS(build_graph(3, {{0, 0}}), std::invalid_argument);   // loop
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), std::invalid_argument);   // out of range
    CHECK_THROWS_AS(build_graph(3, {{-1, 2}}), std::invalid_argument);  // negative
    CHECK_THROWS_AS(build_graph(-1, {}), std::invalid_argument);

    Graph empty = build_graph(0, {});
    CHECK(empty.num_vertices() == 0);
    CHECK(empty.num_edges() == 0);
}

TEST_CASE("neighbor_mask matches adjacency") {
    Graph g = build_graph(5, {{0, 1}, {0, 4}, {2, 3}});
    CHECK(g.neighbor_mask(0) == ((1ULL << 1) | (1ULL << 4)));
    CHECK(g.neighbor_mask(2) == (1ULL << 3));
    CHECK(g.neighbor_mask(1) == 1ULL);
}

TEST_CASE("connectivity, trees, components, distance") {
    Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(is_connected(p4));
    CHECK(is_tree(p4));
    CHECK(distance(p4, 0, 3) == 3);
    CHECK(distance(p4, 2, 2) == 0);

    Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(is_connected(c4));
    CHECK_FALSE(is_tree(c4));
    CHECK(distance(c4, 0, 2) == 2);

    Graph two = build_graph(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(two));
    CHECK_FALSE(is_tree(two));
    CHECK_FALSE(distance(two, 0, 3).has_value());
    auto comps = connected_components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2, 3});

    Graph k1 = build_graph(1, {});
    CHECK(is_connected(k1));
    CHECK(is_tree(k1));
}

TEST_CASE("degree_sequence ascending") {
    Graph g = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    CHECK(degree_sequence(g) == std::vector<int>{1, 1, 1, 2, 3});
}

TEST_CASE("vertex and edge surgery keeps ids compacted") {
    Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph r = remove_vertex(p4, 1);  // survivors 0,2,3 -> ids 0,1,2
    CHECK(r.num_vertices() == 3);
    CHECK(r.edges() == std::vector<std::pair<int, int>>{{1, 2}});

    Graph r2 = remove_vertices(p4, {0, 2});
    CHECK(r2.num_vertices() == 2);
    CHECK(r2.num_edges() == 0);

    Graph plus = with_edge(p4, 0, 3);
    CHECK(plus.num_edges() == 4);
    CHECK(with_edge(p4, 0, 1) == p4);  // re-adding an existing edge is a no-op
    Graph minus = without_edge(p4, 1, 2);
    CHECK(minus.num_edges() == 2);
    CHECK_THROWS_AS(without_edge(p4, 0, 2), std::invalid_argument);  // absent

    Graph du = disjoint_union(p4, build_graph(2, {{0, 1}}));
    CHECK(du.num_vertices() == 6);
    CHECK(du.has_edge(4, 5));
    CHECK_FALSE(is_connected(du));

    Graph ind = induced_subgraph(p4, {3, 2, 0});  // ids in the order given
    CHECK(ind.num_vertices() == 3);
    CHECK(ind.edges() == std::vector<std::pair<int, int>>{{0, 1}});  // old (2,3)
}

TEST_CASE("graph6 bytes derived by hand") {
    // n=2, one edge: size byte 63+2='A'; bit (0,1)=1 -> 100000 -> 63+32='_'.
    CHECK(emit_graph6(build_graph(2, {{0, 1}})) == "A_");
    // P3 as 0-1-2: bits (0,1)=1,(0,2)=0,(1,2)=1 -> 101000 -> 63+40='g'.
    CHECK(emit_graph6(build_graph(3, {{0, 1}, {1, 2}})) == "Bg");
    // Triangle: 111000 -> 63+56='w'.
    CHECK(emit_graph6(build_graph(3, {{0, 1}, {0, 2}, {1, 2}})) == "Bw");
    // Single vertex / empty graphs.
    CHECK(emit_graph6(build_graph(1, {})) == "@");
    CHECK(emit_graph6(build_graph(5, {})) == "D??");

    Graph p3 = parse_graph6("Bg");
    CHECK(p3.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("graph6 round trip incl. the long size form") {
    std::mt19937_64 rng(12345);
    for (int n = 1; n <= 70; n += 3) {
        Graph g = random_graph(n, 0.3, rng);
        Graph back = parse_graph6(emit_graph6(g));
        CHECK(back == g);
    }
    // 63 vertices switches to the '~'-prefixed long form.
    Graph big = random_tree(63, rng);
    std::string s = emit_graph6(big);
    CHECK(s[0] == '~');
    CHECK(parse_graph6(s) == big);
}

TEST_CASE("graph6 malformed input rejected") {
    CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph6("B"), std::invalid_argument);    // truncated bits
    CHECK_THROWS_AS(parse_graph6("Bgg"), std::invalid_argument);  // trailing junk
    CHECK_THROWS_AS(parse_graph6("B\x1f"), std::invalid_argument);  // byte < 63
    // n=3 uses 3 bits; set a padding bit: 101001 -> 63+41='h'.
    CHECK_THROWS_AS(parse_graph6("Bh"), std::invalid_argument);

    auto gs = parse_graph6_lines("A_\nBg\n");
    REQUIRE(gs.size() == 2);
    CHECK(gs[1].num_vertices() == 3);
    CHECK_THROWS_AS(parse_graph6_lines("A_\n\nBg\n"), std::invalid_argument);
}

TEST_CASE("canonical code is relabeling-invariant") {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = trial % 2 ? random_tree(n, rng) : random_graph(n, 0.4, rng);
        CanonicalCode code = canonical_code(g);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_code(relabel(g, perm)) == code);
    }
}

TEST_CASE("canonical code separates non-isomorphic graphs") {
    Graph p4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    Graph star4 = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(canonical_code(p4) != canonical_code(star4));
    CHECK_FALSE(isomorphic(p4, star4));
    CHECK(isomorphic(p4, build_graph(4, {{2, 0}, {0, 3}, {3, 1}})));  // relabeled P4
}

TEST_CASE("canonical code agrees with brute-force isomorphism on n=4") {
    // All 64 labeled graphs on 4 vertices: codes equal iff some permutation maps
    // one edge set onto the other.
    std::vector<Graph> all;
    for (int mask = 0; mask < 64; ++mask) {
        std::vector<std::pair<int, int>> e;
        int bit = 0;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v, ++bit)
                if (mask & (1 << bit)) e.push_back({u, v});
        all.push_back(build_graph(4, e));
    }
    auto brute_iso = [&](const Graph& a, const Graph& b) {
        if (a.num_edges() != b.num_edges()) return false;
        std::vector<int> p{0, 1, 2, 3};
        do {
            if (relabel(a, p) == b) return true;
        } while (std::next_permutation(p.begin(), p.end()));
        return false;
    };
    for (size_t i = 0; i < all.size(); i += 3)
        for (size_t j = i; j < all.size(); j += 5) {
            bool by_code = canonical_code(all[i]) == canonical_code(all[j]);
            CHECK(by_code == brute_iso(all[i], all[j]));
        }
}

TEST_CASE("canonical form and labeling are consistent") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(3 + static_cast<int>(rng() % 8), 0.5, rng);
        Graph cf = canonical_form(g);
        // The code doubles as the graph6 string of the canonical form.
        CHECK(emit_graph6(cf) == canonical_code(g).bytes);
        CHECK(canonical_form(cf) == cf);  // idempotent
        CHECK(isomorphic(cf, g));
        // perm[pos] = old id: relabeling g by the inverse yields the form.
        std::vector<int> perm = canonical_labeling(g);
        std::vector<int> inv(perm.size());
        for (size_t pos = 0; pos < perm.size(); ++pos) inv[perm[pos]] = static_cast<int>(pos);
        CHECK(relabel(g, inv) == cf);
    }
}

TEST_CASE("canonical cap enforced") {
    Graph big = build_graph(kCanonicalCap + 1, {{0, 1}});
    CHECK_THROWS_AS(canonical_code(big), std::invalid_argument);
}

#include "rhomin/canonical.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "rhomin/graph6.hpp"

namespace rhomin {

namespace {

constexpr int N = kCanonicalCap;
using Bits = std::array<std::uint64_t, 3>;

struct Partition {
    std::int8_t elems[N];   // vertices in position order
    std::int8_t csize[N];   // valid at cell start positions
};

struct Search {
    int n = 0;
    const std::uint32_t* adj = nullptr;
    bool have_best = false;
    Bits best{};
    std::int8_t best_perm[N];
    std::int8_t uf[N];  // automorphism orbits

    int find(int v) {
        while (uf[v] != v) v = uf[v] = uf[uf[v]];
        return v;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        uf[b] = a;
    }
};

std::uint32_t cell_mask(const Partition& p, int s, int size) {
    std::uint32_t m = 0;
    for (int i = s; i < s + size; ++i) m |= (1u << p.elems[i]);
    return m;
}

// Refine to a stable (equitable) partition: repeatedly split every cell by
// neighbor counts into every cell, counts ascending, until no split applies.
void refine(const Search& S, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int ds = 0; ds < S.n;) {
            int dz = p.csize[ds];
            std::uint32_t dmask = cell_mask(p, ds, dz);
            for (int cs = 0; cs < S.n;) {
                int cz = p.csize[cs];
                if (cz > 1) {
                    int cnt[N];
                    bool split = false;
                    for (int i = 0; i < cz; ++i) {
                        cnt[i] = std::popcount(S.adj[p.elems[cs + i]] & dmask);
                        if (cnt[i] != cnt[0]) split = true;
                    }
                    if (split) {
                        // stable insertion sort by count ascending
                        for (int i = 1; i < cz; ++i) {
                            int c = cnt[i];
                            std::int8_t v = p.elems[cs + i];
                            int j = i - 1;
                            while (j >= 0 && cnt[j] > c) {
                                cnt[j + 1] = cnt[j];
                                p.elems[cs + j + 1] = p.elems[cs + j];
                                --j;
                            }
                            cnt[j + 1] = c;
                            p.elems[cs + j + 1] = v;
                        }
                        int run = cs;
                        for (int i = 1; i <= cz; ++i) {
                            if (i == cz || cnt[i] != cnt[i - 1]) {
                                p.csize[run] = static_cast<std::int8_t>(cs + i - run);
                                run = cs + i;
                            }
                        }
                        changed = true;
                        if (dz > 1 && cs == ds) {
                            // splitter itself changed; restart pass
                            cs = S.n;
                            ds = S.n;
                            continue;
                        }
                    }
                }
                cs += cz;
            }
            if (ds < S.n) ds += dz;
        }
    }
}

// All cells pairwise and internally homogeneous: any cell-respecting labeling
// yields the same bitstring. Holds trivially for discrete partitions.
bool homogeneous(const Search& S, const Partition& p) {
    for (int as = 0; as < S.n;) {
        int az = p.csize[as];
        int va = p.elems[as];
        for (int bs = 0; bs < S.n;) {
            int bz = p.csize[bs];
            int c = std::popcount(S.adj[va] & cell_mask(p, bs, bz));
            if (as == bs) {
                if (c != 0 && c != az - 1) return false;
            } else {
                if (c != 0 && c != bz) return false;
            }
            bs += bz;
        }
        as += az;
    }
    return true;
}

Bits pack_bits(const Search& S, const std::int8_t* perm, int upto) {
    Bits w{};
    int b = 0;
    for (int j = 1; j < upto; ++j) {
        std::uint32_t row = S.adj[perm[j]];
        for (int i = 0; i < j; ++i, ++b)
            if ((row >> perm[i]) & 1u) w[b >> 6] |= (std::uint64_t{1} << (63 - (b & 63)));
    }
    return w;
}

// Compare the first `nbits` bits of a and b.
int prefix_cmp(const Bits& a, const Bits& b, int nbits) {
    for (int w = 0; w < 3; ++w) {
        int used = std::min(64, nbits - 64 * w);
        if (used <= 0) break;
        std::uint64_t mask = used == 64 ? ~std::uint64_t{0}
                                        : ~std::uint64_t{0} << (64 - used);
        std::uint64_t x = a[w] & mask, y = b[w] & mask;
        if (x != y) return x < y ? -1 : 1;
    }
    return 0;
}

void descend(Search& S, Partition p, int depth) {
    refine(S, p);

    // leading determined positions
    int lead = 0;
    while (lead < S.n && p.csize[lead] == 1) ++lead;
    if (S.have_best && lead >= 2) {
        if (prefix_cmp(pack_bits(S, p.elems, lead), S.best, lead * (lead - 1) / 2) > 0)
            return;
    }

    if (homogeneous(S, p)) {
        for (int cs = 0; cs < S.n;) {  // fix within-cell order for determinism
            int cz = p.csize[cs];
            std::sort(p.elems + cs, p.elems + cs + cz);
            cs += cz;
        }
        Bits code = pack_bits(S, p.elems, S.n);
        if (!S.have_best || prefix_cmp(code, S.best, S.n * (S.n - 1) / 2) < 0) {
            S.best = code;
            std::copy(p.elems, p.elems + S.n, S.best_perm);
            S.have_best = true;
        } else if (prefix_cmp(code, S.best, S.n * (S.n - 1) / 2) == 0) {
            // equal-code leaf: the position-wise map is an automorphism
            for (int i = 0; i < S.n; ++i) S.unite(S.best_perm[i], p.elems[i]);
        }
        return;
    }

    int ts = 0;
    while (p.csize[ts] == 1) ts += p.csize[ts];
    int tz = p.csize[ts];
    std::int8_t cand[N];
    std::copy(p.elems + ts, p.elems + ts + tz, cand);
    std::sort(cand, cand + tz);

    int tried[N];
    int ntried = 0;
    for (int k = 0; k < tz; ++k) {
        int v = cand[k];
        if (depth == 0) {  // orbit pruning, sound at the root only
            bool skip = false;
            for (int t = 0; t < ntried && !skip; ++t)
                if (S.find(v) == S.find(tried[t])) skip = true;
            if (skip) continue;
            tried[ntried++] = v;
        }
        Partition c = p;
        int at = ts;
        while (c.elems[at] != v) ++at;
        std::rotate(c.elems + ts, c.elems + at, c.elems + at + 1);
        c.csize[ts] = 1;
        c.csize[ts + 1] = static_cast<std::int8_t>(tz - 1);
        descend(S, c, depth + 1);
    }
}

}  // namespace

namespace detail {

Bits canon_bits(int n, const std::uint32_t* rows, int* perm) {
    if (n < 0 || n > kCanonicalCap)
        throw std::invalid_argument("canonical form: n above cap");
    if (n == 0) {
        return Bits{};
    }
    Search S;
    S.n = n;
    S.adj = rows;
    for (int v = 0; v < n; ++v) S.uf[v] = static_cast<std::int8_t>(v);

    Partition p;
    // initial cells: degree ascending
    std::int8_t order[N];
    for (int v = 0; v < n; ++v) order[v] = static_cast<std::int8_t>(v);
    std::sort(order, order + n, [&](int a, int b) {
        int da = std::popcount(rows[a]), db = std::popcount(rows[b]);
        return da != db ? da < db : a < b;
    });
    std::copy(order, order + n, p.elems);
    int run = 0;
    for (int i = 1; i <= n; ++i) {
        if (i == n || std::popcount(rows[p.elems[i]]) !=
                          std::popcount(rows[p.elems[i - 1]])) {
            p.csize[run] = static_cast<std::int8_t>(i - run);
            run = i;
        }
    }
    descend(S, p, 0);
    if (perm)
        for (int i = 0; i < n; ++i) perm[i] = S.best_perm[i];
    return S.best;
}

}  // namespace detail

namespace {

void rows_of(const Graph& g, std::uint32_t* rows) {
    int n = g.num_vertices();
    if (n > kCanonicalCap)
        throw std::invalid_argument("canonical form: n above cap");
    for (int v = 0; v < n; ++v) {
        std::uint32_t m = 0;
        for (int w : g.neighbors(v)) m |= (1u << w);
        rows[v] = m;
    }
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    std::uint32_t rows[N];
    rows_of(g, rows);
    std::vector<int> perm(g.num_vertices());
    detail::canon_bits(g.num_vertices(), rows, perm.data());
    return perm;
}

Graph canonical_form(const Graph& g) {
    auto perm = canonical_labeling(g);
    std::vector<int> pos(g.num_vertices());
    for (int i = 0; i < g.num_vertices(); ++i) pos[perm[i]] = i;
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges()) es.emplace_back(pos[u], pos[v]);
    return build_graph(g.num_vertices(), es);
}

CanonicalCode canonical_code(const Graph& g) {
    return CanonicalCode{emit_graph6(canonical_form(g))};
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
        return false;
    if (degree_sequence(a) != degree_sequence(b)) return false;
    return canonical_code(a) == canonical_code(b);
}

}  // namespace rhomin

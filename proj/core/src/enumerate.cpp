#include "rhomin/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>

#include "rhomin/canonical.hpp"
#include "rhomin/domination.hpp"

namespace rhomin {

namespace {

// ---- free trees: canonical rooted level sequences ----

// parents[i] = index of the most recent earlier position one level up.
std::vector<int> parents_from_levels(const std::vector<int>& l) {
    int n = static_cast<int>(l.size());
    std::vector<int> parent(n, -1), last_at(static_cast<size_t>(n) + 2, -1);
    for (int i = 0; i < n; ++i) {
        if (l[i] > 1) parent[i] = last_at[l[i] - 1];
        last_at[l[i]] = i;
    }
    return parent;
}

// Canonical (lexicographically largest) level sequence of the tree rooted
// at r: child blocks sorted in descending order.
std::vector<int> canonical_rooted(const std::vector<std::vector<int>>& adj, int r, int from,
                                  int depth) {
    std::vector<std::vector<int>> blocks;
    for (int w : adj[r]) {
        if (w != from) blocks.push_back(canonical_rooted(adj, w, r, depth + 1));
    }
    std::sort(blocks.begin(), blocks.end(), std::greater<>());
    std::vector<int> out{depth};
    for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace

FreeTreeStream::FreeTreeStream(int n) : n_(n), fresh_(true), done_(false) {
    if (n < 1 || n > kFreeTreeCap) throw std::invalid_argument("free_trees: n out of range");
    levels_.resize(n);
    for (int i = 0; i < n; ++i) levels_[i] = i + 1;  // the path, rooted at an end
}

bool FreeTreeStream::accept() const {
    int n = n_;
    if (n <= 2) return true;
    std::vector<int> parent = parents_from_levels(levels_);
    std::vector<std::vector<int>> adj(n);
    for (int i = 1; i < n; ++i) {
        adj[i].push_back(parent[i]);
        adj[parent[i]].push_back(i);
    }
    // Centroids: minimize the largest remaining component.
    std::vector<int> size(n, 1);
    for (int i = n - 1; i >= 1; --i) size[parent[i]] += size[i];
    int best_weight = n + 1;
    std::vector<int> centroids;
    for (int v = 0; v < n; ++v) {
        int weight = (v == 0) ? 0 : n - size[v];
        for (int w : adj[v]) {
            if (w != parent[v] || v == 0) weight = std::max(weight, size[w]);
        }
        if (weight < best_weight) {
            best_weight = weight;
            centroids = {v};
        } else if (weight == best_weight) {
            centroids.push_back(v);
        }
    }
    // Accept iff this sequence is the largest centroid-rooted canonical one.
    std::vector<int> best_seq;
    for (int c : centroids) {
        std::vector<int> seq = canonical_rooted(adj, c, -1, 1);
        if (seq > best_seq) best_seq = std::move(seq);
    }
    return best_seq == levels_;
}

Graph FreeTreeStream::materialize() const {
    std::vector<int> parent = parents_from_levels(levels_);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n_; ++i) edges.emplace_back(parent[i], i);
    return build_graph(n_, edges);
}

bool FreeTreeStream::next(Graph& out) {
    while (!done_) {
        if (fresh_) {
            fresh_ = false;
        } else {
            // Successor in decreasing lexicographic order: chop the last
            // deep position p back to its parent's pattern.
            int p = -1;
            for (int i = n_ - 1; i >= 0; --i) {
                if (levels_[i] > 2) {
                    p = i;
                    break;
                }
            }
            if (p < 0) {
                done_ = true;
                break;
            }
            int q = -1;
            for (int i = p - 1; i >= 0; --i) {
                if (levels_[i] == levels_[p] - 1) {
                    q = i;
                    break;
                }
            }
            for (int i = p; i < n_; ++i) levels_[i] = levels_[i - (p - q)];
        }
        if (accept()) {
            out = materialize();
            return true;
        }
    }
    return false;
}

// ---- connected graphs: edge augmentation with canonical deletion ----

namespace {

int bits_for(int n) { return n * (n - 1) / 2; }

// Codes pack the upper triangle column-major: bit b of the pair order
// (0,1),(0,2),(1,2),(0,3),... lives at word position 63 - b.
void unpack_rows(int n, uint64_t code, uint32_t* rows) {
    std::fill(rows, rows + n, 0u);
    int b = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++b) {
            if (code >> (63 - b) & 1u) {
                rows[i] |= uint32_t{1} << j;
                rows[j] |= uint32_t{1} << i;
            }
        }
    }
}

// Highest column-major bit index set in the one-word code.
int max_bit_index(uint64_t code) { return 63 - std::countr_zero(code); }

std::pair<int, int> bit_to_pair(int b) {
    int j = 1;
    while ((j + 1) * j / 2 <= b) ++j;
    return {b - j * (j - 1) / 2, j};
}

uint64_t canon_code_of_rows(int n, const uint32_t* rows, int* perm) {
    auto words = detail::canon_bits(n, rows, perm);
    return words[0];
}

bool rows_connected(int n, const uint32_t* rows) {
    uint32_t seen = 1, frontier = 1;
    while (frontier) {
        uint32_t next = 0;
        for (int v = 0; v < n; ++v) {
            if (frontier >> v & 1u) next |= rows[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (uint32_t{1} << n) - 1;
}

}  // namespace

ConnectedGraphStream::ConnectedGraphStream(int n) : n_(n), edges_(0), at_(0) {
    if (n < 1 || n > kConnectedGraphCap)
        throw std::invalid_argument("connected_graphs: n out of range");
    level_ = {0};  // the empty graph's code
}

void ConnectedGraphStream::advance_level() {
    std::vector<uint64_t> next;
    uint32_t rows[kConnectedGraphCap];
    uint32_t child_rows[kConnectedGraphCap];
    uint32_t probe_rows[kConnectedGraphCap];
    int perm[kConnectedGraphCap];
    for (uint64_t parent : level_) {
        unpack_rows(n_, parent, rows);
        std::unordered_set<uint64_t> emitted;
        for (int j = 1; j < n_; ++j) {
            for (int i = 0; i < j; ++i) {
                if (rows[i] >> j & 1u) continue;  // existing edge
                std::copy(rows, rows + n_, child_rows);
                child_rows[i] |= uint32_t{1} << j;
                child_rows[j] |= uint32_t{1} << i;
                uint64_t child = canon_code_of_rows(n_, child_rows, perm);
                if (emitted.count(child)) continue;
                // Canonical deletion: the child's last canonical edge must
                // map back onto this parent.
                auto [ci, cj] = bit_to_pair(max_bit_index(child));
                int du = perm[ci], dv = perm[cj];
                bool ok;
                if ((du == i && dv == j) || (du == j && dv == i)) {
                    ok = true;  // the deleted edge is the one just added
                } else {
                    std::copy(child_rows, child_rows + n_, probe_rows);
                    probe_rows[du] &= ~(uint32_t{1} << dv);
                    probe_rows[dv] &= ~(uint32_t{1} << du);
                    int tmp[kConnectedGraphCap];
                    ok = canon_code_of_rows(n_, probe_rows, tmp) == parent;
                }
                if (ok) {
                    emitted.insert(child);
                    next.push_back(child);
                }
            }
        }
    }
    std::sort(next.begin(), next.end());
    level_ = std::move(next);
    ++edges_;
    at_ = 0;
}

bool ConnectedGraphStream::next(Graph& out) {
    uint32_t rows[kConnectedGraphCap];
    while (true) {
        while (at_ < level_.size()) {
            uint64_t code = level_[at_++];
            unpack_rows(n_, code, rows);
            if (!rows_connected(n_, rows)) continue;
            std::vector<std::pair<int, int>> edges;
            for (int j = 1; j < n_; ++j) {
                for (int i = 0; i < j; ++i) {
                    if (rows[i] >> j & 1u) edges.emplace_back(i, j);
                }
            }
            out = build_graph(n_, edges);
            return true;
        }
        if (edges_ >= bits_for(n_) || level_.empty()) return false;
        advance_level();
    }
}

void class_members(const ClassQuery& q, const std::function<void(const Graph&)>& fn) {
    if (q.gamma && (*q.gamma < 1 || *q.gamma > std::max(1, q.n / 2)))
        throw std::invalid_argument("class_members: gamma out of range");
    auto want = [&](const Graph& g) {
        if (!q.gamma) return true;
        return domination_number(g).gamma == *q.gamma;
    };
    Graph g = build_graph(1, {});
    if (q.trees_only) {
        FreeTreeStream stream(q.n);
        while (stream.next(g)) {
            if (want(g)) fn(g);
        }
    } else {
        ConnectedGraphStream stream(q.n);
        while (stream.next(g)) {
            if (want(g)) fn(g);
        }
    }
}

std::uint64_t count_free_trees(int n) {
    FreeTreeStream s(n);
    Graph g = build_graph(1, {});
    std::uint64_t c = 0;
    while (s.next(g)) ++c;
    return c;
}

std::uint64_t count_connected_graphs(int n) {
    ConnectedGraphStream s(n);
    Graph g = build_graph(1, {});
    std::uint64_t c = 0;
    while (s.next(g)) ++c;
    return c;
}

}  // namespace rhomin

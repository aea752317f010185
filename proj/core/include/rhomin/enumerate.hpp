#ifndef RHOMIN_ENUMERATE_HPP
#define RHOMIN_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rhomin/graph.hpp"

namespace rhomin {

inline constexpr int kFreeTreeCap = 20;
inline constexpr int kConnectedGraphCap = 9;

// One representative per isomorphism class of free trees on n vertices,
// in a fixed deterministic order.  Generation walks canonical rooted level
// sequences (successor rule) and keeps exactly the centroid-rooted ones.
class FreeTreeStream {
public:
    explicit FreeTreeStream(int n);
    bool next(Graph& out);

private:
    bool accept() const;
    Graph materialize() const;
    int n_;
    bool fresh_;
    bool done_;
    std::vector<int> levels_;
};

// One representative per isomorphism class of connected graphs on n
// vertices, ordered by edge count; exhaustive edge-augmentation with
// canonical-deletion acceptance (disconnected classes participate as
// parents, only connected ones are emitted).
class ConnectedGraphStream {
public:
    explicit ConnectedGraphStream(int n);
    bool next(Graph& out);

private:
    void advance_level();
    int n_;
    int edges_;                    // edge count of the current level
    std::vector<uint64_t> level_;  // canonical packed codes at edges_
    size_t at_;                    // emit cursor within level_
};

struct ClassQuery {
    int n = 1;
    std::optional<int> gamma;
    bool trees_only = true;
};

// Stream the isomorphism classes matching the query (domination number
// filter applied when gamma is set).
void class_members(const ClassQuery& q, const std::function<void(const Graph&)>& fn);

std::uint64_t count_free_trees(int n);
std::uint64_t count_connected_graphs(int n);

}  // namespace rhomin

#endif

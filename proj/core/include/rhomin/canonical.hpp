#ifndef RHOMIN_CANONICAL_HPP
#define RHOMIN_CANONICAL_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rhomin/graph.hpp"

namespace rhomin {

inline constexpr int kCanonicalCap = 20;

// Canonical form bytes are the graph6 encoding of the canonical relabeling,
// so codes double as printable graph6 strings.
struct CanonicalCode {
    std::string bytes;
    bool operator==(const CanonicalCode&) const = default;
    bool operator<(const CanonicalCode& o) const { return bytes < o.bytes; }
};

// Iterated neighbor-count refinement with backtracking individualization.
// Among all labelings consistent with the invariant-ordered partition the
// lexicographically least packed adjacency bitstring wins. Equal codes iff
// isomorphic. Throws std::invalid_argument for n > kCanonicalCap.
CanonicalCode canonical_code(const Graph& g);
Graph canonical_form(const Graph& g);
std::vector<int> canonical_labeling(const Graph& g);  // perm[pos] = old vertex id

bool isomorphic(const Graph& a, const Graph& b);

namespace detail {
// Low-level entry used by the enumerator: adjacency given as bitmask rows.
// Returns packed canonical bits (column-major upper triangle; bit b lives in
// word b/64 at position 63-b%64). perm may be null.
std::array<std::uint64_t, 3> canon_bits(int n, const std::uint32_t* rows, int* perm);
}  // namespace detail

}  // namespace rhomin

template <>
struct std::hash<rhomin::CanonicalCode> {
    size_t operator()(const rhomin::CanonicalCode& c) const {
        return std::hash<std::string>{}(c.bytes);
    }
};

#endif

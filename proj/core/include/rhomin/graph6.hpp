#ifndef RHOMIN_GRAPH6_HPP
#define RHOMIN_GRAPH6_HPP

#include <string>
#include <vector>

#include "rhomin/graph.hpp"

namespace rhomin {

// graph6 text format. Short form for n <= 62, the 126-prefixed long form for
// 63 <= n <= 258047. Bits cover the upper triangle column by column:
// (0,1), (0,2), (1,2), (0,3), ..., six bits per byte (MSB first), biased by 63.
// Throws std::invalid_argument on malformed input, including nonzero padding.
Graph parse_graph6(const std::string& s);
std::string emit_graph6(const Graph& g);

// One graph per line; blank lines rejected.
std::vector<Graph> parse_graph6_lines(const std::string& text);

}  // namespace rhomin

#endif

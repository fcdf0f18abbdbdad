#ifndef KSAT_GRAPH6_HPP
#define KSAT_GRAPH6_HPP

#include <string>
#include <string_view>

#include "graph.hpp"

namespace ksat {

// graph6 interchange format, short (single-byte) header variant, n <= 62.
// The optional ">>graph6<<" prefix is accepted on input.  parse(emit(G))
// reproduces G bit-exactly.  Throws ParseError on malformed input and
// std::invalid_argument when asked to emit a graph above the format limit.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

inline constexpr int kGraph6MaxVertices = 62;

}  // namespace ksat

#endif

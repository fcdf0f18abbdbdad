#ifndef KSAT_CANONICAL_HPP
#define KSAT_CANONICAL_HPP

#include <compare>
#include <cstdint>

#include "graph.hpp"

namespace ksat {

// Exact canonical labeling is supported up to this order; the enumeration
// module stays well inside it.
inline constexpr int kCanonicalMaxVertices = 10;

// Lexicographically minimal upper-triangle adjacency bitstring over all
// vertex relabelings, packed MSB-first so integer order equals string order.
// Two graphs of equal order have equal keys iff they are isomorphic.
struct CanonicalForm {
    int n = 0;
    std::uint64_t key = 0;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Graph& g);

// The canonical representative itself (the graph whose pair bits spell `key`).
Graph from_canonical(const CanonicalForm& form);
Graph canonical_graph(const Graph& g);

}  // namespace ksat

#endif

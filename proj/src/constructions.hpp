#ifndef KSAT_CONSTRUCTIONS_HPP
#define KSAT_CONSTRUCTIONS_HPP

#include "graph.hpp"

namespace ksat {

// The minimum K_{r+1}-saturated graph: a clique on r-1 hub vertices plus
// n-r+1 vertices whose neighborhood is exactly the hub set.  Hubs occupy
// vertices 0..r-2 so emitted graph6 strings are stable.
// Requires 2 <= r < n <= 64.
Graph s_graph(int n, int r);

// Complete r-partite graph with part sizes as equal as possible; parts are
// contiguous vertex ranges, larger parts first.  Requires 1 <= r <= n <= 64.
Graph turan_graph(int n, int r);

enum class MooreGraphTag { C5, Petersen, HoffmanSingleton };

// The known diameter-2 Moore graphs: k-regular of girth 5 on k^2+1 vertices
// for k = 2, 3, 7.
Graph moore_graph(MooreGraphTag tag);

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph petersen_graph();
Graph hoffman_singleton_graph();

}  // namespace ksat

#endif

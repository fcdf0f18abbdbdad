#ifndef KSAT_GRAPH_HPP
#define KSAT_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bits.hpp"

namespace ksat {

inline constexpr int kMaxVertices = 64;

// Undirected simple graph on at most 64 vertices, one adjacency bitset per
// vertex.  Graphs are value types; once built they are treated as immutable
// and every query below is const, so they may be shared freely between
// worker threads.
class Graph {
public:
    explicit Graph(int n);

    int order() const { return n_; }
    long edge_count() const;

    void add_edge(int u, int v);  // idempotent; rejects loops
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    std::uint64_t neighbors(int v) const;
    std::vector<int> neighbor_list(int v) const;

    std::uint64_t vertex_mask() const { return low_mask(n_); }
    std::vector<int> degrees() const;
    long sum_degree_squares() const;
    std::vector<std::pair<int, int>> non_edges() const;
    long non_edge_count() const;

    // Subgraph induced by the vertices of `mask`, relabeled to 0..k-1 in
    // ascending vertex order.
    Graph induced(std::uint64_t mask) const;

    // Unchecked row access for hot loops.
    std::uint64_t row(int v) const { return adj_[v]; }

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(int v) const;

    int n_;
    std::vector<std::uint64_t> adj_;
};

// True iff g has k pairwise-adjacent vertices.  K_0 is a subgraph of every
// graph; K_1 is present iff the vertex set is nonempty.
bool contains_clique(const Graph& g, int k);

// Same test restricted to the vertices of `candidates`.
bool contains_clique_in(const Graph& g, std::uint64_t candidates, int k);

// Lexicographically least k-clique inside `candidates`, as an ascending
// vertex list; empty optional if there is none.  Deterministic, so witness
// selection is reproducible across runs and worker counts.
std::optional<std::vector<int>> find_clique_in(const Graph& g, std::uint64_t candidates, int k);
std::optional<std::vector<int>> find_clique(const Graph& g, int k);

std::optional<int> girth(const Graph& g);     // empty iff acyclic
std::optional<int> diameter(const Graph& g);  // empty iff disconnected

// Connected components as vertex bitsets, ordered by least contained vertex.
std::vector<std::uint64_t> components(const Graph& g);

}  // namespace ksat

#endif

#include "constructions.hpp"

#include <stdexcept>
#include <string>

namespace ksat {

Graph s_graph(int n, int r) {
    if (r < 2 || r >= n || n > kMaxVertices)
        throw std::invalid_argument("s_graph requires 2 <= r < n <= 64, got n=" +
                                    std::to_string(n) + " r=" + std::to_string(r));
    Graph g(n);
    const int hubs = r - 1;
    for (int u = 0; u < hubs; ++u)
        for (int v = u + 1; v < hubs; ++v) g.add_edge(u, v);
    for (int leaf = hubs; leaf < n; ++leaf)
        for (int u = 0; u < hubs; ++u) g.add_edge(u, leaf);
    return g;
}

Graph turan_graph(int n, int r) {
    if (r < 1 || r > n || n > kMaxVertices)
        throw std::invalid_argument("turan_graph requires 1 <= r <= n <= 64, got n=" +
                                    std::to_string(n) + " r=" + std::to_string(r));
    Graph g(n);
    // Part p covers a contiguous range; the first n mod r parts get the
    // extra vertex.
    int start = 0;
    std::vector<int> part_of(n);
    for (int p = 0; p < r; ++p) {
        int size = n / r + (p < n % r ? 1 : 0);
        for (int v = start; v < start + size; ++v) part_of[v] = p;
        start += size;
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) g.add_edge(u, v);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph petersen_graph() {
    // Outer 5-cycle 0..4, inner 5-cycle 5..9 with step 2, spokes v -- v+5.
    Graph g(10);
    for (int v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);
        g.add_edge(5 + v, 5 + (v + 2) % 5);
        g.add_edge(v, 5 + v);
    }
    return g;
}

Graph hoffman_singleton_graph() {
    // Five pentagons P_h (vertices 5h+j, j adjacent to j+-1 mod 5) and five
    // pentagrams Q_i (vertices 25+5i+j, j adjacent to j+-2 mod 5); vertex j
    // of P_h is joined to vertex h*i+j mod 5 of Q_i.  The structural
    // invariants (7-regular, girth 5, diameter 2, n=50) are asserted by the
    // test suite; any labeling passing them is acceptable.
    Graph g(50);
    auto p = [](int h, int j) { return 5 * h + j; };
    auto q = [](int i, int j) { return 25 + 5 * i + j; };
    for (int h = 0; h < 5; ++h)
        for (int j = 0; j < 5; ++j) g.add_edge(p(h, j), p(h, (j + 1) % 5));
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) g.add_edge(q(i, j), q(i, (j + 2) % 5));
    for (int h = 0; h < 5; ++h)
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) g.add_edge(p(h, j), q(i, (h * i + j) % 5));
    return g;
}

Graph moore_graph(MooreGraphTag tag) {
    switch (tag) {
        case MooreGraphTag::C5: return cycle_graph(5);
        case MooreGraphTag::Petersen: return petersen_graph();
        case MooreGraphTag::HoffmanSingleton: return hoffman_singleton_graph();
    }
    throw std::invalid_argument("unknown Moore graph tag");
}

}  // namespace ksat

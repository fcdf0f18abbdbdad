#include "graph.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace ksat {

Graph::Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("vertex count must be in [1, 64], got " + std::to_string(n));
    adj_.assign(n, 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(n_));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loop edge (" + std::to_string(u) + ") rejected");
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] & bit(v)) != 0;
}

int Graph::degree(int v) const {
    check_vertex(v);
    return popcount64(adj_[v]);
}

std::uint64_t Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<int> Graph::neighbor_list(int v) const {
    std::vector<int> out;
    out.reserve(degree(v));
    for_each_bit(adj_[v], [&](int u) { out.push_back(u); });
    return out;
}

long Graph::edge_count() const {
    long twice = 0;
    for (std::uint64_t row : adj_) twice += popcount64(row);
    return twice / 2;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = popcount64(adj_[v]);
    return d;
}

long Graph::sum_degree_squares() const {
    long s = 0;
    for (std::uint64_t row : adj_) {
        long d = popcount64(row);
        s += d * d;
    }
    return s;
}

std::vector<std::pair<int, int>> Graph::non_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int v = 1; v < n_; ++v)
        for (int u = 0; u < v; ++u)
            if (!(adj_[u] & bit(v))) out.emplace_back(u, v);
    return out;
}

long Graph::non_edge_count() const { return pair_count(n_) - edge_count(); }

Graph Graph::induced(std::uint64_t mask) const {
    mask &= vertex_mask();
    std::array<int, kMaxVertices> relabel{};
    int k = 0;
    for_each_bit(mask, [&](int v) { relabel[v] = k++; });
    if (k == 0) throw std::invalid_argument("induced subgraph needs at least one vertex");
    Graph sub(k);
    for_each_bit(mask, [&](int v) {
        for_each_bit(adj_[v] & mask, [&](int u) {
            if (u < v) sub.add_edge(relabel[u], relabel[v]);
        });
    });
    return sub;
}

namespace {

// Decision search: does `cand` contain a k-clique?  Branches on the
// non-neighbors of a pivot chosen to maximize candidate coverage; any
// k-clique avoiding all of them would extend by the pivot itself.
bool clique_search(const std::vector<std::uint64_t>& adj, std::uint64_t cand, int k) {
    if (k <= 0) return true;
    if (popcount64(cand) < k) return false;
    if (k == 1) return true;

    int pivot = -1, best = -1;
    for_each_bit(cand, [&](int v) {
        int covered = popcount64(cand & adj[v]);
        if (covered > best) {
            best = covered;
            pivot = v;
        }
    });

    std::uint64_t branches = cand & ~adj[pivot];
    std::uint64_t remaining = cand;
    while (branches) {
        int v = std::countr_zero(branches);
        branches &= branches - 1;
        if (clique_search(adj, remaining & adj[v], k - 1)) return true;
        remaining &= ~bit(v);
        if (popcount64(remaining) < k) return false;
    }
    return false;
}

// Lexicographically least k-clique: vertices tried in ascending order, the
// first complete clique found is the minimum.
bool lex_clique_search(const std::vector<std::uint64_t>& adj, std::uint64_t cand, int k,
                       std::vector<int>& acc) {
    if (k <= 0) return true;
    while (cand) {
        if (popcount64(cand) < k) return false;
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        acc.push_back(v);
        // Only vertices above v remain in `cand`, keeping the list ascending.
        if (lex_clique_search(adj, cand & adj[v], k - 1, acc)) return true;
        acc.pop_back();
    }
    return false;
}

}  // namespace

bool contains_clique_in(const Graph& g, std::uint64_t candidates, int k) {
    if (k < 0) throw std::invalid_argument("clique size must be nonnegative");
    std::vector<std::uint64_t> adj(g.order());
    for (int v = 0; v < g.order(); ++v) adj[v] = g.row(v);
    return clique_search(adj, candidates & g.vertex_mask(), k);
}

bool contains_clique(const Graph& g, int k) { return contains_clique_in(g, g.vertex_mask(), k); }

std::optional<std::vector<int>> find_clique_in(const Graph& g, std::uint64_t candidates, int k) {
    if (k < 0) throw std::invalid_argument("clique size must be nonnegative");
    std::vector<std::uint64_t> adj(g.order());
    for (int v = 0; v < g.order(); ++v) adj[v] = g.row(v);
    std::vector<int> acc;
    acc.reserve(k);
    if (lex_clique_search(adj, candidates & g.vertex_mask(), k, acc)) return acc;
    return std::nullopt;
}

std::optional<std::vector<int>> find_clique(const Graph& g, int k) {
    return find_clique_in(g, g.vertex_mask(), k);
}

std::optional<int> girth(const Graph& g) {
    const int n = g.order();
    int best = -1;
    std::array<int, kMaxVertices> dist{};
    std::array<int, kMaxVertices> parent{};
    std::array<int, kMaxVertices> queue{};
    for (int s = 0; s < n; ++s) {
        dist.fill(-1);
        parent.fill(-1);
        int head = 0, tail = 0;
        queue[tail++] = s;
        dist[s] = 0;
        while (head < tail) {
            int u = queue[head++];
            for_each_bit(g.row(u), [&](int w) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue[tail++] = w;
                } else if (w != parent[u]) {
                    int len = dist[u] + dist[w] + 1;
                    if (best < 0 || len < best) best = len;
                }
            });
            // Cycles closed at depth d have length >= 2d; deeper levels cannot
            // beat the current best for this root.
            if (best >= 0 && dist[u] * 2 >= best) break;
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

std::optional<int> diameter(const Graph& g) {
    const int n = g.order();
    int worst = 0;
    std::array<int, kMaxVertices> dist{};
    std::array<int, kMaxVertices> queue{};
    for (int s = 0; s < n; ++s) {
        dist.fill(-1);
        int head = 0, tail = 0;
        queue[tail++] = s;
        dist[s] = 0;
        int reached = 1;
        while (head < tail) {
            int u = queue[head++];
            for_each_bit(g.row(u), [&](int w) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    queue[tail++] = w;
                    ++reached;
                    worst = std::max(worst, dist[w]);
                }
            });
        }
        if (reached != n) return std::nullopt;
    }
    return worst;
}

std::vector<std::uint64_t> components(const Graph& g) {
    std::vector<std::uint64_t> out;
    std::uint64_t seen = 0;
    const std::uint64_t all = g.vertex_mask();
    while (seen != all) {
        int s = std::countr_zero(~seen & all);
        std::uint64_t comp = bit(s);
        for (;;) {
            std::uint64_t grown = comp;
            for_each_bit(comp, [&](int v) { grown |= g.row(v); });
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(comp);
        seen |= comp;
    }
    return out;
}

}  // namespace ksat

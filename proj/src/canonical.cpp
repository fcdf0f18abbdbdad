#include "canonical.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace ksat {

namespace {

// Exhaustive minimization of the MSB-packed pair bitstring over all vertex
// orderings.  Candidates at each position are tried smallest-column-first, so
// the first completed leaf is already a strong bound; branches whose prefix
// exceeds the best known key are cut, and interchangeable vertices (twins)
// are tried only once per node.
class MinKeySearch {
public:
    explicit MinKeySearch(const Graph& g) : g_(g), n_(g.order()) {}

    std::uint64_t run() {
        descend(0, 0, 0);
        return best_;
    }

private:
    bool twins(int u, int w) const {
        return (g_.row(u) & ~bit(w)) == (g_.row(w) & ~bit(u));
    }

    void descend(int q, std::uint64_t key, int bits) {
        if (q == n_) {
            if (!have_best_ || key < best_) best_ = key;
            have_best_ = true;
            return;
        }
        struct Cand {
            std::uint64_t col;
            int v;
        };
        std::array<Cand, kCanonicalMaxVertices> cand;
        int m = 0;
        for (int v = 0; v < n_; ++v) {
            if (assigned_ & bit(v)) continue;
            std::uint64_t col = 0;
            for (int p = 0; p < q; ++p) col = (col << 1) | ((g_.row(assign_[p]) >> v) & 1);
            cand[m++] = {col, v};
        }
        std::sort(cand.begin(), cand.begin() + m, [](const Cand& a, const Cand& b) {
            return a.col != b.col ? a.col < b.col : a.v < b.v;
        });
        for (int idx = 0; idx < m; ++idx) {
            bool seen_twin = false;
            for (int prev = 0; prev < idx && !seen_twin; ++prev)
                seen_twin = twins(cand[prev].v, cand[idx].v);
            if (seen_twin) continue;

            int nb = bits + q;
            std::uint64_t nk = q == 0 ? key : key | (cand[idx].col << (64 - nb));
            if (have_best_ && nb > 0 && (nk >> (64 - nb)) > (best_ >> (64 - nb))) continue;

            assign_[q] = cand[idx].v;
            assigned_ |= bit(cand[idx].v);
            descend(q + 1, nk, nb);
            assigned_ &= ~bit(cand[idx].v);
        }
    }

    const Graph& g_;
    int n_;
    std::array<int, kCanonicalMaxVertices> assign_{};
    std::uint64_t assigned_ = 0;
    std::uint64_t best_ = 0;
    bool have_best_ = false;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
    if (g.order() > kCanonicalMaxVertices)
        throw std::invalid_argument("exact canonicalization supports at most " +
                                    std::to_string(kCanonicalMaxVertices) + " vertices, got " +
                                    std::to_string(g.order()));
    MinKeySearch search(g);
    return CanonicalForm{g.order(), search.run()};
}

Graph from_canonical(const CanonicalForm& form) {
    Graph g(form.n);
    long p = 0;
    for (int j = 1; j < form.n; ++j)
        for (int i = 0; i < j; ++i, ++p)
            if ((form.key >> (63 - p)) & 1) g.add_edge(i, j);
    return g;
}

Graph canonical_graph(const Graph& g) { return from_canonical(canonical_form(g)); }

}  // namespace ksat

#include "search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "bounds.hpp"
#include "constructions.hpp"
#include "graph6.hpp"
#include "spectral.hpp"

namespace ksat {

namespace {

struct PairTable {
    std::array<int, 28> u{}, v{};  // C(8,2) pairs at most
};

PairTable make_pairs(int n) {
    PairTable t;
    int p = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++p) {
            t.u[p] = i;
            t.v[p] = j;
        }
    return t;
}

// Saturation test on raw adjacency rows; mirrors is_saturated() but avoids
// Graph construction inside the 2^C(n,2) sweep.
bool rows_contain_clique(const std::array<std::uint64_t, 8>& rows, int n, std::uint64_t cand,
                         int k) {
    if (k <= 0) return true;
    if (popcount64(cand) < k) return false;
    if (k == 1) return true;
    int pivot = -1, best = -1;
    for_each_bit(cand, [&](int w) {
        int covered = popcount64(cand & rows[w]);
        if (covered > best) {
            best = covered;
            pivot = w;
        }
    });
    std::uint64_t branches = cand & ~rows[pivot];
    std::uint64_t remaining = cand;
    while (branches) {
        int w = std::countr_zero(branches);
        branches &= branches - 1;
        if (rows_contain_clique(rows, n, remaining & rows[w], k - 1)) return true;
        remaining &= ~bit(w);
        if (popcount64(remaining) < k) return false;
    }
    return false;
}

bool rows_saturated(const std::array<std::uint64_t, 8>& rows, int n, int r) {
    for (int w = 0; w < n; ++w)
        if (popcount64(rows[w]) < r - 1) return false;
    if (rows_contain_clique(rows, n, low_mask(n), r + 1)) return false;
    for (int y = 1; y < n; ++y)
        for (int x = 0; x < y; ++x)
            if (!(rows[x] & bit(y)) &&
                !rows_contain_clique(rows, n, rows[x] & rows[y], r - 1))
                return false;
    return true;
}

}  // namespace

std::vector<CanonicalForm> enumerate_saturated_forms(int n, int r, const CensusOptions& opt) {
    if (n < 3 || n > kEnumerationMaxVertices)
        throw std::invalid_argument("exhaustive enumeration supports 3 <= n <= 8, got n=" +
                                    std::to_string(n));
    if (n == kEnumerationMaxVertices && !opt.allow_order_8)
        throw std::invalid_argument(
            "n = 8 sweeps 2^28 labeled graphs; pass allow_order_8 to opt in");
    if (r < 2 || r >= n)
        throw std::invalid_argument("enumeration requires 2 <= r < n, got n=" +
                                    std::to_string(n) + " r=" + std::to_string(r));

    const int total_bits = static_cast<int>(pair_count(n));
    const PairTable pairs = make_pairs(n);
    // Every vertex of a saturated graph has degree >= r-1 (a vertex with a
    // non-neighbor needs an (r-1)-clique among its neighbors, and a universal
    // vertex has degree n-1), so masks below ceil(n(r-1)/2) edges cannot
    // qualify.
    const int min_edges = (n * (r - 1) + 1) / 2;

    int workers = opt.workers;
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;

    int shard_bits = opt.shard_bits;
    if (shard_bits < 0) shard_bits = workers > 1 ? 10 : 0;
    shard_bits = std::min(shard_bits, total_bits);
    const std::uint64_t shards = std::uint64_t{1} << shard_bits;
    const int low_bits = total_bits - shard_bits;

    std::vector<CanonicalForm> forms;
    std::mutex merge_mutex;
    std::atomic<std::uint64_t> next_shard{0};

    auto sweep = [&]() {
        std::vector<CanonicalForm> local;
        for (;;) {
            std::uint64_t shard = next_shard.fetch_add(1);
            if (shard >= shards) break;
            const std::uint64_t base = shard << low_bits;
            const std::uint64_t end = base + (std::uint64_t{1} << low_bits);
            for (std::uint64_t mask = base; mask < end; ++mask) {
                if (popcount64(mask) < min_edges) continue;
                std::array<std::uint64_t, 8> rows{};
                for_each_bit(mask, [&](int p) {
                    rows[pairs.u[p]] |= bit(pairs.v[p]);
                    rows[pairs.v[p]] |= bit(pairs.u[p]);
                });
                if (!rows_saturated(rows, n, r)) continue;
                Graph g(n);
                for_each_bit(mask, [&](int p) { g.add_edge(pairs.u[p], pairs.v[p]); });
                local.push_back(canonical_form(g));
            }
        }
        std::sort(local.begin(), local.end());
        local.erase(std::unique(local.begin(), local.end()), local.end());
        std::lock_guard<std::mutex> lock(merge_mutex);
        forms.insert(forms.end(), local.begin(), local.end());
    };

    if (workers == 1) {
        sweep();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (int w = 0; w < workers; ++w) pool.emplace_back(sweep);
        for (auto& t : pool) t.join();
    }

    std::sort(forms.begin(), forms.end());
    forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
    return forms;
}

std::vector<Graph> enumerate_saturated(int n, int r, const CensusOptions& opt) {
    std::vector<Graph> out;
    for (const CanonicalForm& form : enumerate_saturated_forms(n, r, opt))
        out.push_back(from_canonical(form));
    return out;
}

SearchCensus run_census(int n, int r, const CensusOptions& opt) {
    SearchCensus census;
    census.n = n;
    census.r = r;

    const long d2_bound = degree_square_lower_bound(n, r);
    for (const CanonicalForm& form : enumerate_saturated_forms(n, r, opt)) {
        Graph g = from_canonical(form);
        CensusMember member;
        member.form = form;
        member.g6 = to_graph6(g);
        member.edges = g.edge_count();
        member.sum_d2 = g.sum_degree_squares();
        member.rho = spectral_radius(g);
        member.sum_d2_tight = member.sum_d2 == d2_bound;
        census.members.push_back(std::move(member));
    }
    if (census.members.empty()) return census;  // cannot happen: s_graph always qualifies

    census.min_edges = census.members.front().edges;
    census.max_edges = census.members.front().edges;
    census.min_sum_d2 = census.members.front().sum_d2;
    census.min_rho = census.members.front().rho;
    for (const CensusMember& m : census.members) {
        census.min_edges = std::min(census.min_edges, m.edges);
        census.max_edges = std::max(census.max_edges, m.edges);
        census.min_sum_d2 = std::min(census.min_sum_d2, m.sum_d2);
        census.min_rho = std::min(census.min_rho, m.rho);
    }

    const double tol = opt.spectral_tol;
    for (std::size_t i = 0; i < census.members.size(); ++i) {
        const CensusMember& m = census.members[i];
        if (m.edges == census.min_edges) census.min_edge_attainers.push_back(i);
        if (m.sum_d2_tight) census.sum_d2_attainers.push_back(i);
        if (m.sum_d2 == census.min_sum_d2) census.min_sum_d2_attainers.push_back(i);
        if (m.rho <= census.min_rho + tol) census.min_rho_attainers.push_back(i);
    }

    census.s_graph_rho = s_graph_spectral_radius(n, r);
    census.rho_lower = spectral_lower_bound(n, r);
    const CanonicalForm s_form = canonical_form(s_graph(n, r));
    for (std::size_t i = 0; i < census.members.size(); ++i)
        if (census.members[i].form == s_form) {
            census.s_graph_index = static_cast<std::ptrdiff_t>(i);
            break;
        }
    census.s_graph_attains_min_rho =
        census.s_graph_index >= 0 &&
        census.members[static_cast<std::size_t>(census.s_graph_index)].rho <= census.min_rho + tol;
    return census;
}

}  // namespace ksat

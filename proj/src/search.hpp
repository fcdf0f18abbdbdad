#ifndef KSAT_SEARCH_HPP
#define KSAT_SEARCH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"

namespace ksat {

inline constexpr int kEnumerationMaxVertices = 8;

struct CensusOptions {
    int workers = 0;            // <= 0 means hardware concurrency
    int shard_bits = -1;        // < 0 picks a default from the search size
    bool allow_order_8 = false; // n = 8 costs 2^28 masks; opt in explicitly
    double spectral_tol = 1e-9; // tie window for spectral-radius attainers
};

// Exactly one representative per isomorphism class of K_{r+1}-saturated
// graphs on n vertices, sorted by canonical key.  The labeled search space
// of all 2^C(n,2) edge subsets is swept with two definition-level prunes
// (minimum degree r-1, reject on a K_{r+1}); shards split over a fixed
// prefix of the high edge bits, so the merged, sorted result is identical
// for every worker count.  Requires 3 <= n <= 8, 2 <= r < n.
std::vector<CanonicalForm> enumerate_saturated_forms(int n, int r, const CensusOptions& opt = {});
std::vector<Graph> enumerate_saturated(int n, int r, const CensusOptions& opt = {});

struct CensusMember {
    CanonicalForm form;
    std::string g6;  // graph6 of the canonical representative
    long edges = 0;
    long sum_d2 = 0;
    double rho = 0.0;
    bool sum_d2_tight = false;  // attains the degree-square lower bound exactly
};

// Everything the census reports for one (n, r): representatives plus the
// extremal records.  The spectral-radius minimum of the s-graph is reported
// alongside the census minimum as evidence only; nothing here asserts it.
struct SearchCensus {
    int n = 0, r = 0;
    std::vector<CensusMember> members;  // sorted by canonical key

    long min_edges = 0, max_edges = 0;
    long min_sum_d2 = 0;
    double min_rho = 0.0;

    std::vector<std::size_t> min_edge_attainers;
    std::vector<std::size_t> sum_d2_attainers;      // exact equality with the bound
    std::vector<std::size_t> min_sum_d2_attainers;
    std::vector<std::size_t> min_rho_attainers;     // within spectral_tol of the min

    double s_graph_rho = 0.0;       // closed-form value for s_graph(n, r)
    double rho_lower = 0.0;         // spectral_lower_bound(n, r)
    std::ptrdiff_t s_graph_index = -1;
    bool s_graph_attains_min_rho = false;
};

SearchCensus run_census(int n, int r, const CensusOptions& opt = {});

}  // namespace ksat

#endif

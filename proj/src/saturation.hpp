#ifndef KSAT_SATURATION_HPP
#define KSAT_SATURATION_HPP

#include <utility>
#include <vector>

#include "graph.hpp"

namespace ksat {

// G is K_{r+1}-saturated iff it is K_{r+1}-free and adding any missing edge
// creates a K_{r+1}.  For a non-edge {x,y} that is equivalent to an
// (r-1)-clique inside N(x) & N(y).
//
// A vertex v is an *apex* of a non-adjacent pair {x,y} in N(v) if
// N(x) & N(y) & N(v) contains an (r-2)-clique: adding xy then completes a
// K_{r+1} through v.  apex_pair_count(v) counts the pairs v serves; every
// non-edge of a saturated graph has at least r-1 apexes.

enum class Verdict { Saturated, NotFree, NotMaximal };

struct NonEdgeWitness {
    int x, y;
    std::vector<int> clique;  // an (r-1)-clique in N(x) & N(y), lexicographically least
};

struct SaturationCertificate {
    Verdict verdict = Verdict::Saturated;
    std::vector<NonEdgeWitness> witnesses;   // Saturated: one entry per non-edge
    std::vector<int> clique;                 // NotFree: a K_{r+1}
    std::pair<int, int> non_edge{-1, -1};    // NotMaximal: an uncompletable non-edge
};

// Full certificate.  Requires r >= 2 and n >= r+1.
SaturationCertificate check_saturation(const Graph& g, int r);

// Boolean fast path sharing the same decision logic; used by the enumerator.
bool is_saturated(const Graph& g, int r);

// Number of non-adjacent pairs {x,y} in N(v) whose triple common
// neighborhood N(x) & N(y) & N(v) contains a K_{r-2}.  The K_0 condition is
// vacuous, so for r = 2 this is just the non-edge count inside N(v).
// Meaningful when G is K_{r+1}-free; computed literally either way.
long apex_pair_count(const Graph& g, int v, int r);

struct NonEdgeApexEntry {
    int x, y;
    long apexes;
};

// Both sides of the aggregate apex inequality (r-1) * |non-edges| <= sum of
// apex_pair_count over all vertices, plus the per-non-edge apex counts.
// Defined only for saturated inputs; throws NotSaturatedError otherwise.
struct ApexSumReport {
    long lhs = 0;  // (r-1) * non-edge count
    long rhs = 0;  // sum over v of apex_pair_count(v)
    bool holds = false;
    long min_apexes = 0;  // least apex count over non-edges (0 when there are none)
    std::vector<NonEdgeApexEntry> per_non_edge;
};
ApexSumReport apex_sum_check(const Graph& g, int r);

// Per-vertex cap apex_pair_count(v) <= C(d(v)-r+2, 2).
struct ApexCapReport {
    long count = 0;
    long cap = 0;
    bool holds = false;
};
ApexCapReport apex_cap_check(const Graph& g, int v, int r);

// Classification of the C(d(v), 2) vertex pairs inside N(v): adjacent pairs,
// non-adjacent pairs whose insertion leaves G[N(v)] K_r-free, and
// non-adjacent pairs whose insertion creates a K_r (the completable pairs;
// their count equals apex_pair_count(v) on K_{r+1}-free graphs).
struct NeighborhoodPairSplit {
    int v = 0;
    long adjacent = 0;
    long inert = 0;
    long completable = 0;
};
NeighborhoodPairSplit neighborhood_pair_split(const Graph& g, int v, int r);

}  // namespace ksat

#endif

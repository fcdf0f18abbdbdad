#ifndef KSAT_BOUNDS_HPP
#define KSAT_BOUNDS_HPP

#include "graph.hpp"

namespace ksat {

// Minimum edge count of an n-vertex K_{r+1}-saturated graph:
//   (r-1)(n-r+1) + C(r-1, 2), attained exactly by s_graph(n, r).
long sat_number(int n, int r);

// Maximum edge count of an n-vertex K_{r+1}-free graph, computed as the edge
// count of the Turan graph.
long ex_number(int n, int r);

// Lower bound for the sum of squared degrees of a K_{r+1}-saturated graph:
//   (n-1)^2 (r-1) + (r-1)^2 (n-r+1).
long degree_square_lower_bound(int n, int r);

// Lower bound for sum (d(v)+1)(d(v)+1-r): (r-1) n (n-r).
long shifted_degree_lower_bound(int n, int r);

// Lower bound for the spectral radius of a K_{r+1}-saturated graph:
//   sqrt(degree_square_lower_bound / n).
double spectral_lower_bound(int n, int r);

// Per-graph verification of every bound, with exact integer equality flags
// for the degree sums and a floating tolerance for the spectral comparisons.
struct BoundsReport {
    int n = 0, r = 0;
    long edges = 0;

    long sum_d2 = 0;
    long sum_d2_bound = 0;
    long sum_d2_slack = 0;
    bool sum_d2_equal = false;

    long shifted_sum = 0;  // sum (d+1)(d+1-r)
    long shifted_bound = 0;
    long shifted_slack = 0;
    bool shifted_equal = false;

    double rho = 0.0;
    double rho_lower = 0.0;  // spectral_lower_bound(n, r)
    double rho_lower_slack = 0.0;
    bool rho_lower_equal = false;

    double rho_turan = 0.0;  // spectral radius of the Turan graph
    double rho_turan_slack = 0.0;
    bool rho_turan_equal = false;

    long sat_edges = 0;  // sat_number(n, r), context
    long ex_edges = 0;   // ex_number(n, r), context

    bool all_hold = false;
};

// Requires a K_{r+1}-saturated input; throws NotSaturatedError otherwise.
// `spectral_tol` controls the floating comparisons (default 1e-9).
BoundsReport verify_graph(const Graph& g, int r, double spectral_tol = 1e-9);

}  // namespace ksat

#endif

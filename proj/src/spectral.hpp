#ifndef KSAT_SPECTRAL_HPP
#define KSAT_SPECTRAL_HPP

#include <vector>

#include "graph.hpp"

namespace ksat {

enum class SpectralMethod { PowerIteration, FullSolver };

struct Spectrum {
    std::vector<double> values;  // nonincreasing
    SpectralMethod method = SpectralMethod::FullSolver;
    double residual = 0.0;
};

struct RadiusResult {
    double value = 0.0;
    SpectralMethod method = SpectralMethod::PowerIteration;
    long iterations = 0;
    double residual = 0.0;
};

// Largest adjacency eigenvalue, absolute accuracy 1e-9.  Shifted power
// iteration first (runs on A + I so the dominant eigenvalue is unique in
// modulus even on bipartite graphs); falls back to the full solver if the
// iteration cap is hit.  Disconnected graphs give the max over components.
double spectral_radius(const Graph& g);
RadiusResult spectral_radius_detail(const Graph& g);

// All n eigenvalues via cyclic Jacobi rotations, off-diagonal Frobenius norm
// driven below 1e-12.
Spectrum full_spectrum(const Graph& g);

// sqrt(sum of squared degrees / n), a lower bound for the spectral radius.
double rayleigh_degree_bound(const Graph& g);

// Exact average as num/den with den > 0 and gcd(num, den) = 1.
struct Rational {
    long long num = 0;
    long long den = 1;

    bool operator==(const Rational&) const = default;
};

// Vertex-partition quotient: entry (i,j) is the average number of neighbors
// in cell j over the vertices of cell i.  Averages are kept as exact
// rationals so the equitability flag never depends on a tolerance.
struct QuotientMatrix {
    int cells = 0;
    std::vector<int> cell_of;        // size n, values 0..cells-1
    std::vector<long> cell_sizes;    // size cells
    std::vector<Rational> average;   // cells x cells, row-major
    std::vector<double> value;       // same entries as doubles
    bool equitable = false;
};

// `cell_of` assigns each vertex a cell id in 0..s-1; every cell must be
// nonempty.  Throws std::invalid_argument on an invalid partition.
QuotientMatrix quotient_matrix(const Graph& g, const std::vector<int>& cell_of);

// Spectral radius of the quotient matrix: quadratic closed form for two
// cells, otherwise eigenvalues of the symmetrized similar matrix
// e_ij / sqrt(|V_i||V_j|).
double quotient_spectral_radius(const QuotientMatrix& q);

// Closed-form spectral radius of s_graph(n, r):
//   (r-2 + sqrt((r-2)^2 + 4(r-1)(n-r+1))) / 2.
double s_graph_spectral_radius(int n, int r);

// Smallest-eigenvalue bound for K_{r+1}-free graphs:
//   lambda_min < -2^{r+1} m^r / (r n^{2r-1}).
// Errors if the input contains a K_{r+1} or has no edges.
struct LambdaMinReport {
    double lambda_min = 0.0;
    double bound = 0.0;
    bool holds = false;
};
LambdaMinReport lambda_min_check(const Graph& g, int r);

}  // namespace ksat

#endif

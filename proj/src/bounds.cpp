#include "bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "constructions.hpp"
#include "errors.hpp"
#include "saturation.hpp"
#include "spectral.hpp"

namespace ksat {

namespace {

void check_range(int n, int r) {
    if (r < 2 || r >= n)
        throw std::invalid_argument("bounds require 2 <= r < n, got n=" + std::to_string(n) +
                                    " r=" + std::to_string(r));
}

}  // namespace

long sat_number(int n, int r) {
    check_range(n, r);
    return static_cast<long>(r - 1) * (n - r + 1) + choose2(r - 1);
}

long ex_number(int n, int r) {
    if (r < 1 || r > n)
        throw std::invalid_argument("extremal number requires 1 <= r <= n");
    // C(n,2) minus the pairs inside parts of sizes n/r and n/r + 1.
    long q = n / r, extra = n % r;
    return pair_count(n) - extra * choose2(q + 1) - (r - extra) * choose2(q);
}

long degree_square_lower_bound(int n, int r) {
    check_range(n, r);
    return static_cast<long>(n - 1) * (n - 1) * (r - 1) +
           static_cast<long>(r - 1) * (r - 1) * (n - r + 1);
}

long shifted_degree_lower_bound(int n, int r) {
    check_range(n, r);
    return static_cast<long>(r - 1) * n * (n - r);
}

double spectral_lower_bound(int n, int r) {
    return std::sqrt(static_cast<double>(degree_square_lower_bound(n, r)) / n);
}

BoundsReport verify_graph(const Graph& g, int r, double spectral_tol) {
    const int n = g.order();
    check_range(n, r);
    if (spectral_tol < 0) throw std::invalid_argument("tolerance must be nonnegative");
    if (!is_saturated(g, r))
        throw NotSaturatedError("bounds verification requires a K_{r+1}-saturated graph");

    BoundsReport rep;
    rep.n = n;
    rep.r = r;
    rep.edges = g.edge_count();

    rep.sum_d2 = g.sum_degree_squares();
    rep.sum_d2_bound = degree_square_lower_bound(n, r);
    rep.sum_d2_slack = rep.sum_d2 - rep.sum_d2_bound;
    rep.sum_d2_equal = rep.sum_d2_slack == 0;

    rep.shifted_sum = 0;
    for (int d : g.degrees()) rep.shifted_sum += static_cast<long>(d + 1) * (d + 1 - r);
    rep.shifted_bound = shifted_degree_lower_bound(n, r);
    rep.shifted_slack = rep.shifted_sum - rep.shifted_bound;
    rep.shifted_equal = rep.shifted_slack == 0;

    rep.rho = spectral_radius(g);
    rep.rho_lower = spectral_lower_bound(n, r);
    rep.rho_lower_slack = rep.rho - rep.rho_lower;
    rep.rho_lower_equal = std::abs(rep.rho_lower_slack) <= spectral_tol;

    rep.rho_turan = spectral_radius(turan_graph(n, r));
    rep.rho_turan_slack = rep.rho_turan - rep.rho;
    rep.rho_turan_equal = std::abs(rep.rho_turan_slack) <= spectral_tol;

    rep.sat_edges = sat_number(n, r);
    rep.ex_edges = ex_number(n, r);

    rep.all_hold = rep.sum_d2_slack >= 0 && rep.shifted_slack >= 0 &&
                   rep.rho_lower_slack >= -spectral_tol && rep.rho_turan_slack >= -spectral_tol;
    return rep;
}

}  // namespace ksat

#include "doctest.h"

#include <cmath>

#include "bounds.hpp"
#include "constructions.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "oracles.hpp"
#include "saturation.hpp"

using namespace ksat;

namespace {

// Brute-force extremes over all labeled n-vertex graphs: the least edge
// count among saturated ones and the largest among K_{r+1}-free ones,
// straight from the literal definitions.
long brute_min_saturated_edges(int n, int r) {
    long best = -1;
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = test::graph_from_mask(n, mask);
        if (!test::literally_saturated(g, r)) continue;
        long m = g.edge_count();
        if (best < 0 || m < best) best = m;
    }
    return best;
}

long brute_max_free_edges(int n, int r) {
    long best = 0;
    const std::uint64_t total = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = test::graph_from_mask(n, mask);
        if (!test::naive_contains_clique(g, r + 1)) best = std::max(best, g.edge_count());
    }
    return best;
}

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("saturation number formula") {
    CHECK(sat_number(5, 2) == 4);
    CHECK(sat_number(7, 3) == 11);
    for (int n = 3; n <= 12; ++n) CHECK(sat_number(n, 2) == n - 1);
    CHECK_THROWS_AS(sat_number(5, 5), std::invalid_argument);

    SUBCASE("matches the brute-force minimum at n = 5") {
        CHECK(brute_min_saturated_edges(5, 2) == sat_number(5, 2));
        CHECK(brute_min_saturated_edges(5, 3) == sat_number(5, 3));
        CHECK(brute_min_saturated_edges(5, 4) == sat_number(5, 4));
    }
    SUBCASE("matches the s-graph edge count for 2 <= r < n <= 20") {
        for (int n = 3; n <= 20; ++n)
            for (int r = 2; r < n; ++r) CHECK(sat_number(n, r) == s_graph(n, r).edge_count());
    }
}

TEST_CASE("extremal number formula") {
    CHECK(ex_number(5, 2) == 6);
    CHECK(ex_number(6, 3) == 12);
    for (int n = 1; n <= 12; ++n) CHECK(ex_number(n, 1) == 0);
    CHECK_THROWS_AS(ex_number(5, 6), std::invalid_argument);

    SUBCASE("matches the brute-force maximum at n = 5") {
        CHECK(brute_max_free_edges(5, 2) == 6);
        CHECK(brute_max_free_edges(5, 3) == ex_number(5, 3));
    }
    SUBCASE("matches the Turan graph for 1 <= r <= n <= 20") {
        for (int n = 1; n <= 20; ++n)
            for (int r = 1; r <= n; ++r) CHECK(ex_number(n, r) == turan_graph(n, r).edge_count());
    }
}

TEST_CASE("right-hand sides of the degree bounds") {
    CHECK(degree_square_lower_bound(5, 2) == 20);
    CHECK(shifted_degree_lower_bound(5, 2) == 15);
    CHECK(spectral_lower_bound(5, 2) == doctest::Approx(2.0));

    CHECK(degree_square_lower_bound(10, 2) == 90);
    CHECK(shifted_degree_lower_bound(10, 2) == 80);
    CHECK(spectral_lower_bound(10, 2) == doctest::Approx(3.0));

    CHECK(degree_square_lower_bound(50, 2) == 2450);
    CHECK(shifted_degree_lower_bound(50, 2) == 2400);
    CHECK(spectral_lower_bound(50, 2) == doctest::Approx(7.0));
}

TEST_CASE("verify_graph on the s-graph family: exact equality in both degree sums") {
    for (int n = 4; n <= 9; ++n) {
        BoundsReport rep = verify_graph(s_graph(n, 3), 3);
        CHECK(rep.all_hold);
        CHECK(rep.sum_d2_equal);
        CHECK(rep.shifted_equal);
        CHECK(rep.sum_d2_slack == 0);
        CHECK(rep.shifted_slack == 0);
        // The spectral bound is strict for r >= 3.
        CHECK_FALSE(rep.rho_lower_equal);
        CHECK(rep.rho_lower_slack > 0);
        CHECK(rep.edges == rep.sat_edges);
    }
}

TEST_CASE("verify_graph on Petersen") {
    BoundsReport rep = verify_graph(petersen_graph(), 2);
    CHECK(rep.all_hold);
    CHECK(rep.sum_d2 == 90);
    CHECK(rep.sum_d2_equal);
    CHECK(rep.rho_lower_equal);  // rho = 3 = bound
    CHECK(rep.rho == doctest::Approx(3.0));
    CHECK(rep.rho_turan == doctest::Approx(5.0));  // K_{5,5}
    CHECK_FALSE(rep.rho_turan_equal);
    CHECK(rep.ex_edges == 25);
}

TEST_CASE("verify_graph refuses non-saturated input") {
    CHECK_THROWS_AS(verify_graph(complete_graph(4), 2), NotSaturatedError);
    CHECK_THROWS_AS(verify_graph(path_graph(5), 2), NotSaturatedError);
    CHECK_THROWS_AS(verify_graph(cycle_graph(5), 2, -1.0), std::invalid_argument);
}

TEST_CASE("degree-square equality at r = 2 forces girth at least 5") {
    // C5 attains equality and indeed has girth 5; K_{2,3} has girth 4 and is
    // strictly above the bound.
    BoundsReport c5 = verify_graph(cycle_graph(5), 2);
    CHECK(c5.sum_d2_equal);
    CHECK(girth(cycle_graph(5)).value_or(0) >= 5);

    BoundsReport k23 = verify_graph(turan_graph(5, 2), 2);
    CHECK_FALSE(k23.sum_d2_equal);
    CHECK(k23.sum_d2 == 30);
}

TEST_CASE("derivation chain between the two degree-sum bounds") {
    // sum d^2 = shifted_sum + 2(r-2)m + (r-1)n, so the shifted bound implies
    // sum d^2 >= shifted_bound + (r-1)n + 2(r-2)m on every saturated graph.
    std::mt19937 rng(83);
    int seen = 0;
    for (int trial = 0; trial < 4000 && seen < 60; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        int r = 2 + static_cast<int>(rng() % 3);
        if (r >= n) continue;
        Graph g = test::random_graph(rng, n, 0.5);
        if (!is_saturated(g, r)) continue;
        ++seen;
        BoundsReport rep = verify_graph(g, r);
        CHECK(rep.sum_d2 == rep.shifted_sum + 2 * (r - 2) * rep.edges + static_cast<long>(r - 1) * n);
        CHECK(rep.sum_d2 >= rep.shifted_bound + static_cast<long>(r - 1) * n + 2 * (r - 2) * rep.edges);
        CHECK(rep.all_hold);
    }
    CHECK(seen == 60);
}

}  // TEST_SUITE
